"""Elements of monoid rings R[M]: finitely supported maps M -> R.

``MonoidRing(R, M)`` is the parent; ``RingElement`` holds a dict from monoid
elements to canonical nonzero raw coefficients.  Multiplication is the
convolution e_a * e_b = e_(a+b).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .coeffring import CoefficientRing, Integers, IntegersMod, Rationals, Scalar
from .errors import (
    InvalidElement,
    MonoidMismatch,
    MorphismMismatch,
    RingMismatch,
    Unsupported,
    ZeroElement,
)
from .monoid import Monoid, MonoidMorphism, TableMonoid, TotalOrder, monoid_order

__all__ = [
    "MonoidRing",
    "RingElement",
    "GradedView",
    "GradedProductRing",
    "epsilon",
    "make_element",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "support",
    "coefficient",
    "components",
    "is_homogeneous",
    "trailing_degree",
    "leading_degree",
    "regrade",
    "pushforward",
    "content_ideal",
]


@dataclass(frozen=True)
class MonoidRing:
    """The monoid ring R[M]."""

    coeffs: CoefficientRing
    monoid: Monoid

    def __call__(self, value) -> "RingElement":
        """Coerce a constant (int, Fraction, Scalar) or an element of this ring."""
        if isinstance(value, RingElement):
            self._check(value)
            return value
        if isinstance(value, Scalar):
            if value.ring != self.coeffs:
                raise RingMismatch(f"{value.ring} vs {self.coeffs}")
            value = value.value
        return RingElement(self, {self.monoid.identity: self.coeffs.canon(value)})

    def _check(self, f: "RingElement"):
        if f.parent.coeffs != self.coeffs:
            raise RingMismatch(f"{f.parent.coeffs} vs {self.coeffs}")
        if f.parent.monoid != self.monoid:
            raise MonoidMismatch(f"{f.parent.monoid} vs {self.monoid}")

    def epsilon(self, m, c=1) -> "RingElement":
        m = self.monoid.validate(m)
        return RingElement(self, {m: self.coeffs.canon(c.value if isinstance(c, Scalar) else c)})

    def element(self, pairs) -> "RingElement":
        """Build from (degree, coefficient) pairs or a mapping; repeated degrees add up."""
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        R, M = self.coeffs, self.monoid
        terms: dict = {}
        for m, c in pairs:
            m = M.validate(m)
            c = R.canon(c.value if isinstance(c, Scalar) else c)
            terms[m] = R.add(terms[m], c) if m in terms else c
        return RingElement(self, terms)

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self(1)

    def __str__(self):
        return f"{self.coeffs}[{self.monoid}]"


class RingElement:
    """An immutable element of R[M]; zero coefficients are never stored."""

    __slots__ = ("parent", "terms", "_hash")

    def __init__(self, parent: MonoidRing, terms: dict):
        R = parent.coeffs
        self.parent = parent
        self.terms = {m: c for m, c in terms.items() if not R.is_zero(c)}
        self._hash = None

    @property
    def ring(self) -> CoefficientRing:
        return self.parent.coeffs

    @property
    def monoid(self) -> Monoid:
        return self.parent.monoid

    # arithmetic ------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, RingElement):
            self.parent._check(other)
            return other
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            return self.parent(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        R = self.ring
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = R.add(out[m], c) if m in out else c
        return RingElement(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return RingElement(self.parent, {m: R.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        R, M = self.ring, self.monoid
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = M.add(a, b)
                c = R.mul(ca, cb)
                out[m] = R.add(out[m], c) if m in out else c
        return RingElement(self.parent, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            from .structure.units import inverse

            return inverse(self) ** (-k)
        out = self.parent.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "RingElement":
        R = self.ring
        c = R.canon(c.value if isinstance(c, Scalar) else c)
        return RingElement(self.parent, {m: R.mul(c, v) for m, v in self.terms.items()})

    # inspection ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.parent == other.parent and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            try:
                return self == self.parent(other)
            except (TypeError, ValueError, ArithmeticError, RingMismatch):
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.parent, frozenset(self.terms.items())))
        return self._hash

    def support(self) -> list:
        return sorted(self.terms, key=self.monoid.key)

    def coefficient(self, m) -> Scalar:
        m = self.monoid.validate(m)
        return Scalar(self.ring, self.terms.get(m, self.ring.zero))

    def coefficients(self) -> list[Scalar]:
        return [Scalar(self.ring, self.terms[m]) for m in self.support()]

    def component(self, m) -> "RingElement":
        m = self.monoid.validate(m)
        return RingElement(self.parent, {m: self.terms[m]} if m in self.terms else {})

    def components(self) -> dict:
        return {m: RingElement(self.parent, {m: self.terms[m]}) for m in self.support()}

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    def degree(self):
        """Degree of a nonzero homogeneous element."""
        if not self.terms:
            raise ZeroElement("the zero element has every degree")
        if len(self.terms) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return next(iter(self.terms))

    def to_json(self) -> dict:
        M, R = self.monoid, self.ring
        return {",".join(map(str, m)): R.format(self.terms[m]) for m in self.support()}

    def __str__(self):
        if not self.terms:
            return "0"
        R = self.ring
        parts = []
        for m in reversed(self.support()):
            basis = "e[" + ",".join(map(str, m)) + "]"
            cs = R.format(self.terms[m])
            if not isinstance(R, (Integers, Rationals, IntegersMod)):
                cs = f"({cs})"
                neg = False
            else:
                neg = cs.startswith("-")
                if neg:
                    cs = cs[1:]
            body = basis if cs == "1" else f"{cs}*{basis}"
            parts.append(("-" if neg else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"RingElement({self.parent}, {self})"


# functional interface ------------------------------------------------------


def epsilon(ring: CoefficientRing, M: Monoid, m, c=1) -> RingElement:
    return MonoidRing(ring, M).epsilon(m, c)


def make_element(ring: CoefficientRing, M: Monoid, pairs) -> RingElement:
    return MonoidRing(ring, M).element(pairs)


def ring_add(f: RingElement, g: RingElement) -> RingElement:
    f.parent._check(g)
    return f + g


def ring_mul(f: RingElement, g: RingElement) -> RingElement:
    f.parent._check(g)
    return f * g


def ring_neg(f: RingElement) -> RingElement:
    return -f


def support(f: RingElement) -> list:
    return f.support()


def coefficient(f: RingElement, m) -> Scalar:
    return f.coefficient(m)


def components(f: RingElement) -> dict:
    return f.components()


def is_homogeneous(f: RingElement) -> bool:
    return f.is_homogeneous()


def _order_for(f: RingElement, order: TotalOrder | None) -> TotalOrder:
    if f.is_zero():
        raise ZeroElement("the zero element has empty support")
    return order if order is not None else monoid_order(f.monoid)


def trailing_degree(f: RingElement, order: TotalOrder | None = None):
    """Smallest support degree under a compatible total order (lex by default)."""
    return _order_for(f, order).min(f.terms)


def leading_degree(f: RingElement, order: TotalOrder | None = None):
    """Largest support degree under a compatible total order (lex by default)."""
    return _order_for(f, order).max(f.terms)


@dataclass(frozen=True)
class GradedView:
    """f split into components S_d = sum of R_m over phi(m) = d."""

    element: RingElement
    morphism: MonoidMorphism
    components: dict

    def degrees(self) -> list:
        return sorted(self.components, key=self.morphism.target.key)

    def total(self) -> RingElement:
        out = self.element.parent.zero()
        for c in self.components.values():
            out = out + c
        return out

    def is_homogeneous(self) -> bool:
        return len(self.components) <= 1

    def component(self, d) -> RingElement:
        return self.components.get(tuple(d), self.element.parent.zero())


def regrade(f: RingElement, phi: MonoidMorphism) -> GradedView:
    if phi.source != f.monoid:
        raise MorphismMismatch(f"morphism source {phi.source} is not {f.monoid}")
    buckets: dict = {}
    for m, c in f.terms.items():
        buckets.setdefault(phi(m), {})[m] = c
    comps = {d: RingElement(f.parent, t) for d, t in buckets.items()}
    return GradedView(f, phi, comps)


def pushforward(f: RingElement, phi: MonoidMorphism) -> RingElement:
    """Image of f under the ring map R[M] -> R[M'] induced by phi."""
    if phi.source != f.monoid:
        raise MorphismMismatch(f"morphism source {phi.source} is not {f.monoid}")
    target = MonoidRing(f.ring, phi.target)
    return target.element((phi(m), c) for m, c in f.terms.items())


def content_ideal(f: RingElement) -> list[Scalar]:
    """Generators of the ideal of R generated by the coefficients of f.

    Over Z and Z/n the ideal is principal and a single gcd generator is
    returned; over a field it is (1) unless f = 0.  Otherwise the
    coefficient list itself.
    """
    R = f.ring
    if f.is_zero():
        return []
    if isinstance(R, IntegersMod):
        g = R.n
        for c in f.terms.values():
            g = gcd(g, c)
        return [Scalar(R, g % R.n)]
    if isinstance(R, Integers):
        g = 0
        for c in f.terms.values():
            g = gcd(g, c)
        return [Scalar(R, g)]
    if R.is_field:
        return [Scalar(R, R.one)]
    return f.coefficients()


# --- the two Z x Z gradings by the multiplicative monoid {1, 3, 0} of Z/6 ---

ONE_THREE_ZERO = TableMonoid(
    table=((0, 1, 2), (1, 1, 2), (2, 2, 2)),
    identity_index=0,
    labels=("1", "3", "0"),
)


class GradedProductRing:
    """Z x Z graded by {1, 3, 0}: R_1 = 0, R_3 = Z x 0, R_0 = 0 x Z.

    ``kind="direct"`` is the direct product; ``kind="idealization"`` is the
    idealization (a, b)(c, d) = (ac, ad + bc).  Both share the components.
    """

    monoid = ONE_THREE_ZERO

    def __init__(self, kind: str = "direct"):
        if kind not in ("direct", "idealization"):
            raise ValueError(f"unknown kind {kind!r}")
        self.kind = kind

    @property
    def one(self) -> tuple[int, int]:
        return (1, 1) if self.kind == "direct" else (1, 0)

    def mul(self, x, y):
        (a, b), (c, d) = x, y
        if self.kind == "direct":
            return (a * c, b * d)
        return (a * c, a * d + b * c)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def components(self, x) -> dict:
        """Nonzero homogeneous components keyed by degree label."""
        a, b = x
        out = {}
        if a:
            out["3"] = (a, 0)
        if b:
            out["0"] = (0, b)
        return out

    def degree_of(self, label: str):
        return (self.monoid.labels.index(label),)

    def is_homogeneous(self, x) -> bool:
        return len(self.components(x)) <= 1

    def check_grading(self, samples: Iterable[int] = range(-3, 4)) -> bool:
        """R_a R_b is contained in R_(ab) on sample homogeneous elements."""
        M = self.monoid
        pieces = {"1": [(0, 0)], "3": [(s, 0) for s in samples], "0": [(0, s) for s in samples]}
        for la, xs in pieces.items():
            for lb, ys in pieces.items():
                target = M.format(M.add(self.degree_of(la), self.degree_of(lb)))
                for x in xs:
                    for y in ys:
                        z = self.mul(x, y)
                        comps = self.components(z)
                        if comps and set(comps) != {target}:
                            return False
        return True
