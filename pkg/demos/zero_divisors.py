"""Zero-divisors: constant annihilators over Z/n and a non-graded annihilator.

Over Z/n a zero-divisor of the polynomial ring is always killed by one
nonzero constant.  Over k[x1..x4]/I with I = (x1x3, x2x4, x1x4 + x2x3)
the annihilator of x3 T + x4 is not graded, yet a homogeneous
annihilator can be extracted from any annihilator by repeated shrinking.
"""
from gradedrings import QQ, FreeMonoid, MonoidRing, Zmod
from gradedrings.grobner import PolynomialQuotient, PolynomialRing, buchberger
from gradedrings.structure import annihilator_is_graded_in_window, is_zero_divisor, shrink_trace

P = MonoidRing(Zmod(6), FreeMonoid(1))
print("Constant annihilators in (Z/6)[x]:")
for f in [P(2), P.epsilon((1,), 3), P.element({(0,): 2, (1,): 3}), P.element({(0,): 4, (2,): 2})]:
    print(f"  {str(f):16} zero-divisor: {is_zero_divisor(f)}")

K = PolynomialRing(QQ, ("x1", "x2", "x3", "x4"))
x1, x2, x3, x4 = K.gens()
gb = buchberger([x1 * x3, x2 * x4, x1 * x4 + x2 * x3])
print(f"\nReduced lex basis of I: {gb}")

Q = PolynomialQuotient(gb)
S = MonoidRing(Q, FreeMonoid(1))
g = S.element({(1,): Q.canon(x1), (0,): Q.canon(x2)})
f = S.element({(1,): Q.canon(x3), (0,): Q.canon(x4)})
print(f"g = {g}\nf = {f}\ng*f = {g * f}")
print(f"components of g times f: {g.component((1,)) * f}  and  {g.component((0,)) * f}")

check = annihilator_is_graded_in_window(f, [(0,), (1,)])
h, m = check.witness
print(f"\nAnnihilator of f in degrees 0..1 graded? {check.graded}; witness {h} fails at degree {m[0]}")

print("\nShrinking g to a homogeneous annihilator:")
for step in shrink_trace(g, [f]):
    how = f"multiply by the degree-{step.degree[0]} part of f" if step.degree is not None else "homogeneous component kills f"
    print(f"  {str(step.element):40} ({how})")
