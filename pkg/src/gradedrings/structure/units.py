"""Units of group rings and of monoid rings with a minimal identity."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..coeffring import (
    Integers,
    IntegersMod,
    Rationals,
    Scalar,
    crt_combine,
    crt_decompose,
    scalar_is_nilpotent,
)
from ..errors import HypothesisViolation, NotAUnit, Unsupported
from ..monoid import FreeMonoid, Submonoid, TableMonoid, monoid_order
from ..monoidring import MonoidRing, RingElement
from ._hyp import require_torsion_free_cancellative, require_torsion_free_group

REASONS = ("CoefficientsNotComaximal", "ProductNotNilpotent", "ConstantNotUnit", "Other")


@dataclass(frozen=True)
class UnitCertificate:
    """Verdict of a unit test.

    ``witness`` names the offending degrees: a pair (i, k) for
    ProductNotNilpotent, a single degree for Other.
    """

    is_unit: bool
    inverse: RingElement | None = None
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.is_unit

    def __str__(self):
        if self.is_unit:
            return f"Unit({self.inverse})" if self.inverse is not None else "Unit"
        if self.reason == "ProductNotNilpotent" and self.witness:
            i, k = self.witness
            return f"NotUnit(ProductNotNilpotent({','.join(map(str, i))}; {','.join(map(str, k))}))"
        return f"NotUnit({self.reason})"


def _comaximal(f: RingElement) -> bool:
    R = f.ring
    vals = list(f.terms.values())
    if isinstance(R, IntegersMod):
        g = R.n
        for c in vals:
            g = gcd(g, c)
        return g == 1
    if isinstance(R, Integers):
        g = 0
        for c in vals:
            g = gcd(g, c)
        return g == 1
    if isinstance(R, Rationals):
        return bool(vals)
    raise Unsupported(f"co-maximality of coefficients is not decided over {R}")


def evaluate_unit_conditions(f: RingElement) -> UnitCertificate:
    """The two coefficient conditions, without checking any hypothesis on M.

    (1) the coefficients generate the unit ideal; (2) every product of two
    coefficients at distinct degrees is nilpotent.
    """
    if not _comaximal(f):
        return UnitCertificate(False, reason="CoefficientsNotComaximal")
    supp = f.support()
    R = f.ring
    for a in range(len(supp)):
        for b in range(a + 1, len(supp)):
            i, k = supp[a], supp[b]
            prod = Scalar(R, R.mul(f.terms[i], f.terms[k]))
            if not scalar_is_nilpotent(prod):
                return UnitCertificate(False, reason="ProductNotNilpotent", witness=(i, k))
    return UnitCertificate(True)


def check_unit_characterization(f: RingElement) -> UnitCertificate:
    """Decide whether f in R[G] is a unit, G a torsion-free abelian group.

    R must be Z/n, QQ or ZZ.  A positive verdict carries the inverse.
    """
    require_torsion_free_group(f.monoid)
    cert = evaluate_unit_conditions(f)
    if cert.is_unit:
        return UnitCertificate(True, inverse=invert_group_ring(f))
    return cert


def _invert_prime_power(f: RingElement, p: int, k: int) -> RingElement:
    """Inverse of f in (Z/p^k)[G] using f = a e_x (1 + nu) with nu = 0 mod p."""
    R = f.ring
    M = f.monoid
    mod_p = [(m, c) for m, c in f.terms.items() if c % p]
    if len(mod_p) != 1:
        raise NotAUnit(f"{f} is not a unit: its reduction mod {p} is not homogeneous")
    x, a = mod_p[0]
    u_inv = MonoidRing(R, M).epsilon(M.neg(x), R.inverse(a))
    nu = u_inv * f - 1
    # nu has all coefficients divisible by p, so nu**k = 0
    out = f.parent.zero()
    term = f.parent.one()
    for _ in range(k):
        out = out + term
        term = term * (-nu)
    if not term.is_zero():
        raise AssertionError("geometric series did not terminate")
    return out * u_inv


def invert_group_ring(f: RingElement) -> RingElement:
    """f^-1 in (Z/n)[G], QQ[G] or ZZ[G], G a finitely generated torsion-free abelian group."""
    require_torsion_free_group(f.monoid)
    R, M = f.ring, f.monoid
    if f.is_zero():
        raise NotAUnit("0 is not a unit")
    if isinstance(R, (Rationals, Integers)):
        if not f.is_homogeneous():
            raise NotAUnit(f"{f} is not homogeneous, so not a unit over a reduced ring")
        (x, r), = f.terms.items()
        if not R.is_unit(r):
            raise NotAUnit(f"coefficient {r} is not a unit of {R}")
        inv = MonoidRing(R, M).epsilon(M.neg(x), R.inverse(r))
    elif isinstance(R, IntegersMod):
        comps = crt_decompose(R.n)
        pieces = []
        for comp in comps:
            sub = IntegersMod(comp.modulus)
            fp = MonoidRing(sub, M).element((m, c) for m, c in f.terms.items())
            pieces.append(_invert_prime_power(fp, comp.p, comp.k))
        degrees = set()
        for piece in pieces:
            degrees.update(piece.terms)
        inv = f.parent.element(
            (m, crt_combine([piece.terms.get(m, 0) for piece in pieces], comps, R.n)) for m in degrees
        )
    else:
        raise Unsupported(f"group ring inversion is implemented over Z/n, QQ and ZZ, not {R}")
    if f * inv != 1:
        raise AssertionError(f"computed inverse {inv} of {f} does not check")
    return inv


def _require_minimal_identity(M) -> None:
    if isinstance(M, FreeMonoid):
        return
    if isinstance(M, TableMonoid) or not M.is_cancellative:
        raise HypothesisViolation(f"{M} is not cancellative", reason="NotCancellative")
    require_torsion_free_cancellative(M)
    order = monoid_order(M)
    gens = M.gens if isinstance(M, Submonoid) else M.generators()
    for g in gens:
        if not order.lt(M.identity, g):
            raise HypothesisViolation(
                f"the identity of {M} is not its minimum (generator {g})", reason="IdentityNotMinimal"
            )


def is_unit_monoid_ring(f: RingElement) -> UnitCertificate:
    """Unit test in R[M] when the identity of M is its least element.

    f is a unit iff its constant coefficient is a unit of R and all other
    coefficients are nilpotent; the inverse is a finite geometric series.
    """
    M, R = f.monoid, f.ring
    _require_minimal_identity(M)
    r0 = f.terms.get(M.identity, R.zero)
    if not R.is_unit(r0):
        return UnitCertificate(False, reason="ConstantNotUnit", witness=(M.identity,))
    for m in f.support():
        if m != M.identity and not scalar_is_nilpotent(Scalar(R, f.terms[m])):
            return UnitCertificate(False, reason="Other", witness=(m,))
    c = R.inverse(r0)
    nu = f.scale(c) - 1
    out = f.parent.zero()
    term = f.parent.one()
    e = R.nilpotency_bound() or 1
    cap = max(1, len(nu.terms)) * max(1, e - 1) + 1
    for _ in range(cap):
        out = out + term
        term = term * (-nu)
        if term.is_zero():
            break
    else:
        raise AssertionError("geometric series did not terminate")
    inv = out.scale(c)
    if f * inv != 1:
        raise AssertionError(f"computed inverse {inv} of {f} does not check")
    return UnitCertificate(True, inverse=inv)


def inverse(f: RingElement) -> RingElement:
    """Inverse of a unit, dispatching on the shape of the grading monoid."""
    if f.monoid.is_group:
        return invert_group_ring(f)
    cert = is_unit_monoid_ring(f)
    if not cert.is_unit:
        raise NotAUnit(f"{f} is not a unit: {cert}")
    return cert.inverse
