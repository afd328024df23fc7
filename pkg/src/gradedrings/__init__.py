"""Exact computations in graded rings and monoid rings R[M].

Homogeneity of units, nilpotents, zero-divisors and idempotents, with the
supporting machinery: coefficient rings, finitely generated monoids and
abelian groups, and a small Groebner basis engine.
"""
from .coeffring import QQ, ZZ, BoundedSearch, Scalar, Zmod
from .errors import GradedRingError, HypothesisViolation, NotAUnit, NotTorsionFree
from .grobner import PolynomialQuotient, PolynomialRing, buchberger, normal_form
from .monoid import (
    AbelianGroup,
    FreeMonoid,
    MonoidMorphism,
    Submonoid,
    TableMonoid,
    free_abelian_group,
    grothendieck_group,
    torsion_subgroup,
)
from .monoidring import MonoidRing, RingElement, regrade

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "ZZ",
    "AbelianGroup",
    "BoundedSearch",
    "FreeMonoid",
    "GradedRingError",
    "HypothesisViolation",
    "MonoidMorphism",
    "MonoidRing",
    "NotAUnit",
    "NotTorsionFree",
    "PolynomialQuotient",
    "PolynomialRing",
    "RingElement",
    "Scalar",
    "Submonoid",
    "TableMonoid",
    "Zmod",
    "buchberger",
    "free_abelian_group",
    "grothendieck_group",
    "normal_form",
    "regrade",
    "torsion_subgroup",
]
