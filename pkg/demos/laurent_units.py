"""Units of (Z/n)[x, x^-1] that are not homogeneous, and how they are inverted.

Over a reduced ring every unit of a Laurent ring is a monomial.  Over Z/6
the coefficients may split across the idempotents 3 and 4, so 2x + 3x^-1 is
a unit: mod 2 it is x^-1, mod 3 it is 2x.
"""
from gradedrings import MonoidRing, Zmod, free_abelian_group
from gradedrings.structure import check_unit_characterization, evaluate_unit_conditions, windowed_inverse

R = MonoidRing(Zmod(6), free_abelian_group(1))


def show(f):
    cert = check_unit_characterization(f)
    print(f"{str(f):28} {cert}")
    return cert


print("Coefficient test: the coefficients generate (1) and cross products are nilpotent.")
g = R.element({(1,): 2, (-1,): 3})
cert = show(g)
print(f"  check: ({g}) * ({cert.inverse}) = {g * cert.inverse}")

show(R.element({(0,): 1, (1,): 1}))
show(R.element({(0,): 2, (2,): 4}))

print("\nThe same verdicts from a linear solve over a support window -6..6:")
window = [(d,) for d in range(-6, 7)]
for f in [g, R.element({(0,): 1, (1,): 1}), R.element({(3,): 5, (0,): 3})]:
    found = windowed_inverse(f, window)
    print(f"  {str(f):24} coefficient test={bool(evaluate_unit_conditions(f))!s:5} window inverse={found}")

print("\nOver Z/8 a unit plus nilpotent terms stays a unit; the inverse is a geometric series.")
R8 = MonoidRing(Zmod(8), free_abelian_group(1))
u = R8.element({(0,): 3, (1,): 2, (-2,): 4})
print(f"  {u}  ->  {u ** -1}")
