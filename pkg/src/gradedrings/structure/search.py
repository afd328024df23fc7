"""Brute-force searches over a finite support window (used as oracles)."""
from __future__ import annotations

from itertools import product
from typing import Iterator

from ..coeffring import IntegersMod
from ..errors import Unsupported
from ..linalg import left_solve_mod
from ..monoidring import MonoidRing, RingElement


def enumerate_window(parent: MonoidRing, window) -> Iterator[RingElement]:
    """Every element of R[M] over a finite R with support inside ``window``."""
    M, R = parent.monoid, parent.coeffs
    win = sorted({M.validate(w) for w in window}, key=M.key)
    values = list(R.elements())
    for coeffs in product(values, repeat=len(win)):
        yield RingElement(parent, dict(zip(win, coeffs)))


def windowed_inverse(f: RingElement, window) -> RingElement | None:
    """Some g supported in ``window`` with f g = 1 over Z/n, or None.

    Solves the linear system x A = e_0 mod n where row w of A holds the
    coefficients of e_w f.
    """
    R, M = f.ring, f.monoid
    if not isinstance(R, IntegersMod):
        raise Unsupported(f"windowed inverse search is implemented over Z/n, not {R}")
    win = sorted({M.validate(w) for w in window}, key=M.key)
    degrees = {M.identity}
    for w in win:
        for m in f.terms:
            degrees.add(M.add(w, m))
    degrees = sorted(degrees, key=M.key)
    col = {d: j for j, d in enumerate(degrees)}
    A = [[0] * len(degrees) for _ in win]
    for i, w in enumerate(win):
        for m, c in f.terms.items():
            j = col[M.add(w, m)]
            A[i][j] = (A[i][j] + c) % R.n
    b = [int(d == M.identity) for d in degrees]
    x = left_solve_mod(A, b, R.n)
    if x is None:
        return None
    g = RingElement(f.parent, {w: v % R.n for w, v in zip(win, x)})
    if f * g != 1:
        raise AssertionError("windowed inverse does not check")
    return g
