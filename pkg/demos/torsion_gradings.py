"""What goes wrong once the grading group has torsion.

In QQ[Z/n] the averaging element is a non-homogeneous idempotent, and
1 - 2f is a non-homogeneous unit.  In F_p[Z/p] the element e_0 - e_1 is
nilpotent while its component e_1 is a unit, so the nilradical is not
graded; this is F_p[x] regraded mod p and divided by x^p - 1.
"""
from fractions import Fraction

from gradedrings import QQ, AbelianGroup, FreeMonoid, MonoidMorphism, MonoidRing, Zmod
from gradedrings.monoidring import regrade
from gradedrings.structure import is_nilpotent_bruteforce, nilradical_graded_check

for n in (2, 3, 4):
    R = MonoidRing(QQ, AbelianGroup(0, (n,)))
    f = R.element({(k,): Fraction(1, n) for k in range(n)})
    u = 1 - 2 * f
    print(f"QQ[Z/{n}]: f = {f}\n  f*f == f: {f * f == f}; u = 1 - 2f = {u}; u*u = {u * u}")

print()
for p in (2, 3, 5):
    C = AbelianGroup(0, (p,))
    F = MonoidRing(Zmod(p), C)
    h = F.epsilon((0,)) - F.epsilon((1,))
    check = nilradical_graded_check([h])
    _, d, c = check.witness
    print(f"F_{p}[Z/{p}]: h = {h} nilpotent {is_nilpotent_bruteforce(h, 16)}; component {c} at degree {d[0]} is not")

p = 3
N = FreeMonoid(1)
phi = MonoidMorphism(N, AbelianGroup(0, (p,)), matrix=[[1]])
P = MonoidRing(Zmod(p), N)
fp = (P.epsilon((1,)) - 1) ** p
print(f"\nIn F_3[x], (x - 1)^3 = {fp}; degrees mod 3: {[d[0] for d in regrade(fp, phi).degrees()]}")
