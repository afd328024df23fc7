"""Exact commutative coefficient rings: ZZ, QQ, Z/n and (via grobner) polynomial quotients.

A ring descriptor knows how to canonicalize and combine *raw* values
(``int``, ``Fraction``, residues, normal-form polynomials).  ``Scalar`` wraps a
raw value together with its ring and gives the usual operators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Any, NamedTuple

from .errors import (
    EmptyInput,
    NotAUnit,
    NotIdempotentModuloNilradical,
    RingMismatch,
    Unsupported,
)

#: Largest modulus accepted by ``IntegersMod`` (moduli are factored eagerly).
MAX_MODULUS = 2**31


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` by trial division, as ((p, k), ...)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def radical(n: int) -> int:
    return prod(p for p, _ in factorize(n))


class BoundedSearch(NamedTuple):
    """Outcome of a bounded search for an exponent (e.g. nilpotency index).

    ``exponent`` is the smallest witness found, or None if none exists up to
    ``bound``.
    """

    exponent: int | None
    bound: int

    @property
    def found(self) -> bool:
        return self.exponent is not None

    def __str__(self):
        return f"Yes({self.exponent})" if self.found else f"NoUpTo({self.bound})"


class CoefficientRing:
    """Interface implemented by every coefficient ring descriptor."""

    is_field = False
    is_finite = False
    name = "?"

    zero: Any = 0
    one: Any = 1

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} vs {self}")
            return value
        return Scalar(self, self.canon(value))

    # raw-value arithmetic -------------------------------------------------
    def canon(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return self.canon(a + b)

    def sub(self, a, b):
        return self.canon(a - b)

    def neg(self, a):
        return self.canon(-a)

    def mul(self, a, b):
        return self.canon(a * b)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def is_nilpotent(self, a) -> bool:
        raise Unsupported(f"nilpotence is not decided over {self}")

    def nilpotency_bound(self) -> int | None:
        """An exponent k with a**k == 0 for every nilpotent a (None if unknown)."""
        return None

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        raise Unsupported(f"{self} is infinite")


@dataclass(frozen=True)
class Integers(CoefficientRing):
    name = "ZZ"

    def canon(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into ZZ")
        return value

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        if a not in (1, -1):
            raise NotAUnit(f"{a} is not a unit of ZZ")
        return a

    def is_nilpotent(self, a):
        return a == 0

    def nilpotency_bound(self):
        return 1

    def __str__(self):
        return "ZZ"


@dataclass(frozen=True)
class Rationals(CoefficientRing):
    name = "QQ"
    is_field = True

    def canon(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a rational number")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        raise TypeError(f"cannot coerce {value!r} into QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a != 0

    def inverse(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / a

    def is_nilpotent(self, a):
        return a == 0

    def nilpotency_bound(self):
        return 1

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class IntegersMod(CoefficientRing):
    """Z/n with residues in [0, n); the modulus is factored at construction."""

    n: int
    factors: tuple[tuple[int, int], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.n!r}")
        if self.n > MAX_MODULUS:
            raise ValueError(f"modulus {self.n} exceeds the configured bound {MAX_MODULUS}")
        object.__setattr__(self, "factors", factorize(self.n))

    is_finite = True

    @property
    def name(self):
        return f"Zmod({self.n})"

    @property
    def is_field(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def radical(self) -> int:
        return prod(p for p, _ in self.factors)

    def canon(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a residue")
        if isinstance(value, int):
            return value % self.n
        if isinstance(value, Fraction):
            num = value.numerator % self.n
            den = value.denominator % self.n
            if gcd(den, self.n) != 1:
                raise NotAUnit(f"denominator of {value} is not invertible mod {self.n}")
            return num * pow(den, -1, self.n) % self.n
        raise TypeError(f"cannot coerce {value!r} into Z/{self.n}")

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inverse(self, a):
        if gcd(a, self.n) != 1:
            raise NotAUnit(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)

    def is_nilpotent(self, a):
        return a % self.radical == 0

    def nilpotency_bound(self):
        return max(k for _, k in self.factors)

    def elements(self):
        return range(self.n)

    def __str__(self):
        return self.name


ZZ = Integers()
QQ = Rationals()


def Zmod(n: int) -> IntegersMod:
    return IntegersMod(n)


@dataclass(frozen=True)
class Scalar:
    """An element of a coefficient ring, held in canonical form."""

    ring: CoefficientRing
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return self.ring.canon(other)

    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar(self.ring, self.ring.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar(self.ring, self.ring.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return scalar_inverse(self) ** -k
        out = self.ring.one
        base = self.value
        while k:
            if k & 1:
                out = self.ring.mul(out, base)
            base = self.ring.mul(base, base)
            k >>= 1
        return Scalar(self.ring, out)

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ring.canon(other)
            except (TypeError, ValueError, ArithmeticError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Scalar({self.ring}, {self.ring.format(self.value)})"


def _check_same(a: Scalar, b: Scalar):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_is_unit(a: Scalar) -> bool:
    return a.ring.is_unit(a.value)


def scalar_inverse(a: Scalar) -> Scalar:
    return Scalar(a.ring, a.ring.inverse(a.value))


def scalar_is_nilpotent(a: Scalar) -> bool:
    """Decide nilpotence over ZZ, QQ and Z/n (Z/n: rad(n) divides a)."""
    if not isinstance(a.ring, (Integers, Rationals, IntegersMod)):
        raise Unsupported(f"scalar_is_nilpotent does not handle {a.ring}; use grobner.is_nilpotent_bounded")
    return a.ring.is_nilpotent(a.value)


def scalar_constant_annihilator(coeffs) -> Scalar | None:
    """Generator of the common annihilator of a list of residues mod n.

    Returns ``n / gcd(n, c_1, ..., c_k)`` when that gcd exceeds 1, else None
    (only zero kills every coefficient).
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise EmptyInput("need at least one coefficient")
    ring = coeffs[0].ring
    if not isinstance(ring, IntegersMod):
        raise Unsupported(f"constant annihilators are computed over Z/n, not {ring}")
    for c in coeffs:
        _check_same(coeffs[0], c)
    g = ring.n
    for c in coeffs:
        g = gcd(g, c.value)
    if g == 1:
        return None
    return Scalar(ring, ring.n // g)


def lift_idempotent(a: Scalar) -> Scalar:
    """Lift an idempotent of Z/rad(n) to an idempotent of Z/n.

    Iterates e <- 3e^2 - 2e^3, which fixes idempotents and squares the
    defect e^2 - e at every step.
    """
    ring = a.ring
    if not isinstance(ring, IntegersMod):
        raise Unsupported(f"idempotent lifting is implemented over Z/n, not {ring}")
    n, r = ring.n, ring.radical
    if (a.value * a.value - a.value) % r:
        raise NotIdempotentModuloNilradical(f"{a.value}^2 != {a.value} mod {r}")
    max_exp = ring.nilpotency_bound()
    limit = max(1, (max_exp - 1).bit_length()) + 1
    e = a.value
    for _ in range(limit + 1):
        nxt = (3 * e * e - 2 * e * e * e) % n
        if nxt == e:
            return Scalar(ring, e)
        e = nxt
    raise AssertionError(f"lifting {a} mod {n} did not converge in {limit} steps")


class CRTComponent(NamedTuple):
    p: int
    k: int
    coefficient: int  # == 1 mod p**k and == 0 mod n / p**k

    @property
    def modulus(self) -> int:
        return self.p**self.k


def crt_decompose(n: int) -> list[CRTComponent]:
    """Split Z/n into prime-power factors with recombination idempotents."""
    if n < 2:
        raise ValueError("n must be >= 2")
    out = []
    for p, k in factorize(n):
        q = p**k
        rest = n // q
        out.append(CRTComponent(p, k, rest * pow(rest, -1, q) % n))
    return out


def crt_combine(residues, components, n: int) -> int:
    return sum(r * c.coefficient for r, c in zip(residues, components)) % n
