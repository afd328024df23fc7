"""Idempotents, their location, and products with nilpotent coefficients."""
from __future__ import annotations

from dataclasses import dataclass

from ..coeffring import Scalar, scalar_is_nilpotent
from ..errors import Unsupported
from ..monoid import AbelianGroup, quasi_torsion_contains
from ..monoidring import RingElement
from ._hyp import require_torsion_free_cancellative
from .nilpotence import is_nilpotent_bruteforce, nilpotency_search_bound


def is_idempotent(f: RingElement) -> bool:
    return f * f == f


def idempotent_support_in_torsion(f: RingElement) -> bool:
    """Is every support degree of f torsion (quasi-torsion for monoids)?"""
    M = f.monoid
    if isinstance(M, AbelianGroup):
        return all(M.is_torsion_element(m) for m in f.terms)
    return all(quasi_torsion_contains(M, m) for m in f.terms)


@dataclass(frozen=True)
class ComponentwiseResult:
    """fg is nilpotent iff every product of a coefficient of f with one of g is.

    ``witness`` is the first pair of degrees (i, k) whose coefficient
    product is not nilpotent.
    """

    nilpotent: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.nilpotent


def componentwise_nilpotent_product(f: RingElement, g: RingElement) -> ComponentwiseResult:
    """Decide nilpotence of fg both directly and through coefficient pairs.

    The direct side multiplies fg by itself up to an exponent that must kill
    it if all its coefficients are nilpotent.  Disagreement raises.
    """
    f.parent._check(g)
    require_torsion_free_cancellative(f.monoid)
    R = f.ring
    fg = f * g
    bound = nilpotency_search_bound(fg)
    if bound is None:
        raise Unsupported(f"no nilpotency bound is known over {R}")
    direct = is_nilpotent_bruteforce(fg, bound).found
    witness = None
    for i in f.support():
        for k in g.support():
            if not scalar_is_nilpotent(Scalar(R, R.mul(f.terms[i], g.terms[k]))):
                witness = (i, k)
                break
        if witness:
            break
    pairwise = witness is None
    if direct != pairwise:
        raise AssertionError(f"fg nilpotent={direct} but coefficient pairs nilpotent={pairwise}")
    return ComponentwiseResult(direct, witness)
