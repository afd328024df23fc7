"""Nilpotence in monoid rings."""
from __future__ import annotations

from ..coeffring import BoundedSearch, scalar_is_nilpotent
from ..monoidring import RingElement
from ._hyp import require_torsion_free_cancellative


def is_nilpotent(f: RingElement) -> bool:
    """f is nilpotent iff every coefficient is.

    Valid when M is cancellative with torsion-free Grothendieck group; on
    torsion gradings use :func:`is_nilpotent_bruteforce`.
    """
    require_torsion_free_cancellative(f.monoid)
    return all(scalar_is_nilpotent(c) for c in f.coefficients())


def is_nilpotent_bruteforce(f: RingElement, bound: int) -> BoundedSearch:
    """Smallest k <= bound with f**k == 0, by repeated multiplication."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    p = f
    for k in range(1, bound + 1):
        if p.is_zero():
            return BoundedSearch(k, bound)
        if k < bound:
            p = p * f
    return BoundedSearch(None, bound)


def nilpotency_search_bound(f: RingElement) -> int | None:
    """An exponent that kills f whenever all coefficients of f are nilpotent.

    A sum of s commuting elements each killed by the e-th power is killed by
    the (s(e-1)+1)-th power.
    """
    e = f.ring.nilpotency_bound()
    if e is None:
        return None
    s = max(1, len(f.terms))
    return s * (e - 1) + 1
