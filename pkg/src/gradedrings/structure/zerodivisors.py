"""Zero-divisors, annihilators and the homogeneous-annihilator shrink."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..coeffring import (
    Integers,
    IntegersMod,
    Rationals,
    Scalar,
    scalar_constant_annihilator,
)
from ..errors import GradedRingError, NotAnAnnihilator, Unsupported, WindowTooSmall, ZeroElement
from ..grobner import PolynomialQuotient
from ..linalg import left_kernel_mod, nullspace_field, transpose
from ..monoid import TotalOrder, monoid_order
from ..monoidring import RingElement
from ._hyp import require_torsion_free_cancellative


@dataclass(frozen=True)
class ZeroDivisorVerdict:
    """Yes(a) with a nonzero constant a such that a*f = 0, or No."""

    is_zero_divisor: bool
    witness: Scalar | None = None

    def __bool__(self):
        return self.is_zero_divisor

    def __str__(self):
        return f"Yes({self.witness})" if self.is_zero_divisor else "No"


def is_zero_divisor(f: RingElement) -> ZeroDivisorVerdict:
    """Zero-divisor test by the constant-annihilator criterion.

    Over Z/n, f is a zero-divisor iff a single nonzero constant kills it;
    over a domain (fields, ZZ) the monoid ring is a domain.  The zero
    element is reported as a zero-divisor with witness 1.
    """
    R = f.ring
    require_torsion_free_cancellative(f.monoid)
    if f.is_zero():
        return ZeroDivisorVerdict(True, Scalar(R, R.one))
    if isinstance(R, IntegersMod):
        a = scalar_constant_annihilator(f.coefficients())
        return ZeroDivisorVerdict(a is not None, a)
    if isinstance(R, (Rationals, Integers)) or R.is_field:
        return ZeroDivisorVerdict(False)
    raise Unsupported(f"constant annihilators are not computed over {R}; use annihilator_in_window")


# --- shrinking an annihilator to a homogeneous one -------------------------


@dataclass(frozen=True)
class ShrinkStep:
    """One pass of the shrink loop.

    ``generator`` is the index of the ideal generator used and ``degree``
    the degree t of its component f_t; both are None on the final step.
    """

    element: RingElement
    generator: int | None = None
    degree: tuple | None = None

    def to_json(self):
        return {
            "element": str(self.element),
            "support_size": len(self.element.terms),
            "generator": self.generator,
            "degree": list(self.degree) if self.degree is not None else None,
        }


def _kills(g: RingElement, gens: Sequence[RingElement]) -> bool:
    return all((g * h).is_zero() for h in gens)


def iter_shrink(g: RingElement, gens: Sequence[RingElement], order: TotalOrder | None = None) -> Iterator[ShrinkStep]:
    """Yield the successive annihilators visited by the shrink procedure.

    While no homogeneous component of g kills the ideal: take s = n^*(g),
    the first generator f with g_s f != 0, the largest t with g f_t != 0,
    and replace g by g f_t.  Supports shrink strictly at every step.  The
    final step carries the homogeneous annihilator.
    """
    gens = list(gens)
    if g.is_zero():
        raise ZeroElement("the shrink procedure starts from a nonzero annihilator")
    for h in gens:
        g.parent._check(h)
    if not _kills(g, gens):
        raise NotAnAnnihilator(f"{g} does not annihilate every generator")
    M = g.monoid
    require_torsion_free_cancellative(M)
    order = order if order is not None else monoid_order(M)
    while True:
        for m in order.sorted(g.terms, reverse=True):
            comp = g.component(m)
            if _kills(comp, gens):
                yield ShrinkStep(comp)
                return
        s = order.max(g.terms)
        gs = g.component(s)
        idx = next(i for i, h in enumerate(gens) if not (gs * h).is_zero())
        f = gens[idx]
        t = next(t for t in order.sorted(f.terms, reverse=True) if not (g * f.component(t)).is_zero())
        new = g * f.component(t)
        if not 0 < len(new.terms) < len(g.terms):
            raise AssertionError(
                f"support did not shrink: {len(g.terms)} -> {len(new.terms)}"
            )
        yield ShrinkStep(new, idx, t)
        g = new


def shrink_trace(g: RingElement, gens: Sequence[RingElement], order: TotalOrder | None = None) -> list[ShrinkStep]:
    return list(iter_shrink(g, gens, order))


def shrink_to_homogeneous_annihilator(
    g: RingElement, gens: Sequence[RingElement], order: TotalOrder | None = None
) -> RingElement:
    """A nonzero homogeneous element killing every generator, derived from g."""
    *_, last = iter_shrink(g, gens, order)
    h = last.element
    if h.is_zero() or not h.is_homogeneous() or not _kills(h, gens):
        raise AssertionError("shrink produced an invalid annihilator")
    return h


# --- annihilators inside a finite support window ---------------------------


@dataclass(frozen=True)
class GradednessCheck:
    graded: bool
    witness: tuple | None = None  # (kernel element, degree of the failing component)

    def __bool__(self):
        return self.graded


def _window(M, W) -> list:
    out = []
    for w in W:
        w = M.validate(w)
        if w not in out:
            out.append(w)
    return sorted(out, key=M.key)


def _coeff_basis(R, coeff_degree: int) -> list:
    """A k-basis of the coefficients allowed in window searches."""
    if isinstance(R, PolynomialQuotient):
        gb = R.gb
        mons = gb.standard_monomials(None if gb.is_zero_dimensional() else coeff_degree)
        return [R.canon(R.poly_ring.monomial(e)) for e in mons]
    return [R.one]


def annihilator_in_window(f: RingElement, W, coeff_degree: int = 1) -> list[RingElement]:
    """Generators of {h supported in W : h f = 0}.

    Over Z/n the result generates the kernel as a Z/n-module (Smith form of
    the convolution matrix); over QQ and Z/p it is a vector-space basis.
    Over a polynomial quotient k[x]/I the coefficients of h range over the
    span of standard monomials of degree <= ``coeff_degree`` (all of them if
    the quotient is finite-dimensional) and the result is a k-basis.

    Raises WindowTooSmall if the kernel is empty although f is known to be a
    zero-divisor.
    """
    M, R = f.monoid, f.ring
    win = _window(M, W)
    basis = _coeff_basis(R, coeff_degree)
    unknowns = [(w, b) for w in win for b in basis]
    # column of the linear map x -> (sum x_(w,b) b e_w) * f
    columns = []
    for w, b in unknowns:
        prod: dict = {}
        for m, c in f.terms.items():
            d = M.add(w, m)
            v = R.mul(b, c)
            prod[d] = R.add(prod[d], v) if d in prod else v
        columns.append(prod)
    if isinstance(R, PolynomialQuotient):
        F = R.field
        coords = sorted(
            {(d, e) for col in columns for d, v in col.items() for e in v.terms},
            key=lambda t: (M.key(t[0]), t[1]),
        )
        rows = [[col.get(d, R.zero).terms.get(e, F.zero) for col in columns] for d, e in coords]
        kernel = nullspace_field(rows, F, ncols=len(unknowns))
        coef_zero = F.is_zero
        mult = lambda x, b: R.mul(R.canon(R.poly_ring(x)), b)  # noqa: E731
    else:
        degrees = sorted({d for col in columns for d in col}, key=M.key)
        rows = [[col.get(d, R.zero) for col in columns] for d in degrees]
        if isinstance(R, IntegersMod) and not R.is_field:
            kernel = left_kernel_mod(transpose(rows, len(unknowns)), R.n, nrows=len(unknowns))
        elif R.is_field:
            kernel = nullspace_field(rows, R, ncols=len(unknowns))
        else:
            raise Unsupported(f"windowed annihilators are not computed over {R}")
        coef_zero = lambda x: R.is_zero(R.canon(x))  # noqa: E731
        mult = R.mul
    out = []
    for vec in kernel:
        acc: dict = {}
        for (w, b), x in zip(unknowns, vec):
            if coef_zero(x):
                continue
            v = mult(x, b)
            acc[w] = R.add(acc[w], v) if w in acc else v
        h = RingElement(f.parent, acc)
        if not h.is_zero():
            if not (h * f).is_zero():
                raise AssertionError("kernel vector does not annihilate")
            out.append(h)
    if not out:
        try:
            zd = is_zero_divisor(f)
        except GradedRingError:
            zd = None
        if zd:
            raise WindowTooSmall(f"{f} is a zero-divisor but no annihilator is supported in {win}")
    return out


def annihilator_is_graded_in_window(f: RingElement, W, coeff_degree: int = 1) -> GradednessCheck:
    """Does every homogeneous component of every windowed annihilator kill f?"""
    for h in annihilator_in_window(f, W, coeff_degree):
        for m in h.support():
            if not (h.component(m) * f).is_zero():
                return GradednessCheck(False, (h, m))
    return GradednessCheck(True)
