"""Grothendieck groups of gradings, and a grading where 1 is not homogeneous.

The submonoid N(1,0) + N(1,1) of Z x Z/n is cancellative with group
Z + Z/n.  The multiplicative monoid {1, 3, 0} of Z/6 is not cancellative:
its Grothendieck group is trivial, and grading Z x Z by it splits the
identity (1, 1) across two components.
"""
from gradedrings import AbelianGroup, Submonoid, grothendieck_group, torsion_subgroup
from gradedrings.monoid import canonical_map_is_injective, quasi_zero_submonoid
from gradedrings.monoidring import ONE_THREE_ZERO, GradedProductRing

for n in (2, 3, 4):
    M = Submonoid(AbelianGroup(1, (n,)), ((1, 0), (1, 1)))
    G, phi = grothendieck_group(M)
    T, _ = torsion_subgroup(G)
    print(f"{M}: group {G}, torsion {T}, injective {canonical_map_is_injective(M)}")

M = ONE_THREE_ZERO
G, _ = grothendieck_group(M)
print(f"\n{{1, 3, 0}}: cancellative {M.is_cancellative}, group order {G.order}, "
      f"injective {canonical_map_is_injective(M)}")
print(f"quasi-zero elements: {[M.format(x) for x in quasi_zero_submonoid(M)]}")

for kind in ("direct", "idealization"):
    A = GradedProductRing(kind)
    comps = A.components(A.one)
    print(f"{kind:13} Z x Z: identity {A.one}, components {comps}, homogeneous {A.is_homogeneous(A.one)}")
