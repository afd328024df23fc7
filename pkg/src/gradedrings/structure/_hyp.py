"""Hypothesis checks shared by the decision procedures."""
from __future__ import annotations

from ..errors import HypothesisViolation, NotTorsionFree
from ..monoid import Monoid, grothendieck_group


def require_torsion_free_cancellative(M: Monoid) -> None:
    """M must be cancellative with a torsion-free Grothendieck group."""
    if not M.is_cancellative:
        raise HypothesisViolation(f"{M} is not cancellative", reason="NotCancellative")
    G, _ = grothendieck_group(M)
    if not G.is_torsion_free:
        raise NotTorsionFree(f"the Grothendieck group {G} of {M} has torsion")


def require_torsion_free_group(M: Monoid) -> None:
    if not M.is_group:
        raise HypothesisViolation(f"{M} is not a group", reason="NotAGroup")
    require_torsion_free_cancellative(M)
