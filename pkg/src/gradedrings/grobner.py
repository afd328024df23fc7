"""A small Buchberger engine over QQ and Z/p, and quotient rings k[x]/I.

Polynomials are sparse maps from exponent tuples to canonical field values.
This is desk-scale machinery: normal strategy, first-by-order pair
selection, a reduction budget, and a final reduced basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .coeffring import BoundedSearch, CoefficientRing, IntegersMod, QQ, Rationals
from .errors import BudgetExceeded, NotAUnit, RingMismatch, Unsupported
from .linalg import solve_field

ORDERS = ("lex", "grevlex")

#: Default caps: number of variables and number of reduction steps.
MAX_VARIABLES = 8
MAX_REDUCTIONS = 100_000


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e), tuple(-c for c in reversed(e)))


@dataclass(frozen=True)
class PolynomialRing:
    field: CoefficientRing
    names: tuple[str, ...]
    order: str = "lex"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.field.is_field:
            raise Unsupported(f"Groebner bases need field coefficients, not {self.field}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown term order {self.order!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if len(self.names) > MAX_VARIABLES:
            raise BudgetExceeded(f"at most {MAX_VARIABLES} variables are supported")

    @property
    def nvars(self):
        return len(self.names)

    def key(self, e):
        return _lex_key(e) if self.order == "lex" else _grevlex_key(e)

    def with_order(self, order: str) -> "PolynomialRing":
        return PolynomialRing(self.field, self.names, order)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring.field != self.field or value.ring.names != self.names:
                raise RingMismatch(f"{value.ring} vs {self}")
            return Polynomial(self, value.terms)
        c = self.field.canon(value)
        return Polynomial(self, {(0,) * self.nvars: c})

    def gens(self) -> list["Polynomial"]:
        return [self.monomial(tuple(int(i == j) for j in range(self.nvars))) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field.canon(coeff)})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self(1)

    def __str__(self):
        return f"{self.field}[{', '.join(self.names)}] ({self.order})"


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        F = ring.field
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not F.is_zero(c)}
        self._hash = None

    # arithmetic ------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.ring.field != self.ring.field or other.ring.names != self.ring.names:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out[e], c) if e in out else c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

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
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = F.mul(c1, c2)
                out[e] = F.add(out[e], c) if e in out else c
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()})

    def shift(self, exps, c) -> "Polynomial":
        """c * x^exps * self."""
        F = self.ring.field
        return Polynomial(
            self.ring, {tuple(a + b for a, b in zip(e, exps)): F.mul(c, v) for e, v in self.terms.items()}
        )

    # inspection ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def leading_monomial(self):
        return max(self.terms, key=self.ring.key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        return self.scale(self.ring.field.inverse(self.leading_coefficient()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.field == other.ring.field and self.ring.names == other.ring.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.ring.names, e) if k
            )
            cs = self.ring.field.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}" if "/" not in cs else f"({cs})*{mono}"
            else:
                body = cs
            parts.append(("-" if neg else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.cap:
            raise BudgetExceeded(f"more than {self.cap} reduction steps")


def _reduce(f: Polynomial, basis: Sequence[Polynomial], budget=None, quotients=None) -> Polynomial:
    """Full reduction of f by basis (every term, not just the leading one)."""
    R = f.ring
    F = R.field
    lead = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        m = max(p, key=R.key)
        c = p[m]
        for i, (lm, lc, g) in enumerate(lead):
            if _divides(lm, m):
                if budget is not None:
                    budget.tick()
                q = F.mul(c, F.inverse(lc))
                shift = tuple(a - b for a, b in zip(m, lm))
                for e, v in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    nv = F.sub(p.get(e2, F.zero), F.mul(q, v))
                    if F.is_zero(nv):
                        p.pop(e2, None)
                    else:
                        p[e2] = nv
                if quotients is not None:
                    quotients[i] = quotients[i] + R.monomial(shift, q)
                break
        else:
            rem[m] = c
            del p[m]
    return Polynomial(R, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    F = f.ring.field
    lf, lg = f.leading_monomial(), g.leading_monomial()
    L = _lcm(lf, lg)
    a = f.shift(tuple(x - y for x, y in zip(L, lf)), F.inverse(f.leading_coefficient()))
    b = g.shift(tuple(x - y for x, y in zip(L, lg)), F.inverse(g.leading_coefficient()))
    return a - b


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """A reduced Groebner basis (monic, sorted by decreasing leading monomial)."""

    ring: PolynomialRing
    generators: tuple[Polynomial, ...]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring, self.generators))

    @property
    def order(self):
        return self.ring.order

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.generators]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return _reduce(self.ring(f), self.generators)

    def divide(self, f: Polynomial) -> tuple[list[Polynomial], Polynomial]:
        """Quotients q_i and remainder r with f = sum q_i g_i + r."""
        f = self.ring(f)
        qs = [self.ring.zero() for _ in self.generators]
        r = _reduce(f, self.generators, quotients=qs)
        return qs, r

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_groebner(self) -> bool:
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not _reduce(s_polynomial(gens[i], gens[j]), gens).is_zero():
                    return False
        return True

    def is_standard(self, e) -> bool:
        return not any(_divides(lm, e) for lm in self.leading_monomials())

    def is_zero_dimensional(self) -> bool:
        """Is k[x]/I finite-dimensional (a pure power of every variable leads)?"""
        n = self.ring.nvars
        lms = self.leading_monomials()
        if any(all(c == 0 for c in lm) for lm in lms):
            return True
        return all(any(lm[i] > 0 and sum(lm) == lm[i] for lm in lms) for i in range(n))

    def standard_monomials(self, max_degree: int | None = None) -> list[tuple]:
        """Monomials outside the leading ideal, sorted by increasing term order.

        Without ``max_degree`` the quotient must be finite-dimensional.
        """
        n = self.ring.nvars
        lms = self.leading_monomials()
        if any(all(c == 0 for c in lm) for lm in lms):
            return []
        if max_degree is None:
            if not self.is_zero_dimensional():
                raise Unsupported("the quotient is infinite-dimensional; give max_degree")
            bounds = []
            for i in range(n):
                bounds.append(min(lm[i] for lm in lms if lm[i] > 0 and sum(lm) == lm[i]))
            cands = product(*(range(b) for b in bounds))
        else:
            cands = (e for e in product(range(max_degree + 1), repeat=n) if sum(e) <= max_degree)
        out = [tuple(e) for e in cands if self.is_standard(e)]
        return sorted(out, key=self.ring.key)

    def __str__(self):
        return "{" + ", ".join(map(str, self.generators)) + "}"


def buchberger(
    gens: Iterable[Polynomial],
    order: str | None = None,
    max_reductions: int = MAX_REDUCTIONS,
    ring: PolynomialRing | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    An empty generator list gives the zero ideal; then ``ring`` is required.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("the zero ideal needs an explicit ring")
        ring = gens[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
    G = [ring(g) for g in gens]
    G = [g.monic() for g in G if not g.is_zero()]
    budget = _Budget(max_reductions)
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]

    def pair_key(p):
        i, j = p
        return (ring.key(_lcm(G[i].leading_monomial(), G[j].leading_monomial())), i, j)

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        h = _reduce(s_polynomial(G[i], G[j]), G, budget)
        if h.is_zero():
            continue
        G.append(h.monic())
        k = len(G) - 1
        pairs.extend((a, k) for a in range(k))
    return GroebnerBasis(ring, tuple(_interreduce(G, budget)))


def _interreduce(G: list[Polynomial], budget) -> list[Polynomial]:
    if not G:
        return []
    ring = G[0].ring
    # drop generators whose leading monomial is divisible by another's
    keep = []
    for i, g in enumerate(G):
        lm = g.leading_monomial()
        dominated = False
        for j, h in enumerate(G):
            if i == j:
                continue
            lh = h.leading_monomial()
            if _divides(lh, lm) and (lh != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = _reduce(g, others, budget)
        out.append(r.monic())
    return sorted(out, key=lambda p: ring.key(p.leading_monomial()), reverse=True)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def is_nilpotent_bounded(a, gb: GroebnerBasis, bound: int) -> BoundedSearch:
    """Smallest k <= bound with a^k in the ideal, else NoUpTo(bound)."""
    p = gb.normal_form(a)
    cur = p
    for k in range(1, bound + 1):
        if cur.is_zero():
            return BoundedSearch(k, bound)
        cur = gb.normal_form(cur * p)
    return BoundedSearch(None, bound)


class PolynomialQuotient(CoefficientRing):
    """k[x1..xn]/I as a coefficient ring; values are normal-form polynomials."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.poly_ring = gb.ring
        self.zero = gb.ring.zero()
        self.one = gb.normal_form(gb.ring.one())
        self._dim_basis = None

    def __eq__(self, other):
        return isinstance(other, PolynomialQuotient) and self.gb == other.gb

    def __hash__(self):
        return hash(("PolynomialQuotient", self.gb))

    @property
    def field(self):
        return self.poly_ring.field

    @property
    def is_finite(self):
        return isinstance(self.field, IntegersMod) and self.gb.is_zero_dimensional()

    @property
    def name(self):
        return f"{self.poly_ring.field}[{','.join(self.poly_ring.names)}]/{self.gb}"

    def canon(self, value):
        if isinstance(value, Polynomial):
            return self.gb.normal_form(value)
        return self.gb.normal_form(self.poly_ring(value))

    def add(self, a, b):
        return a + b  # sums of normal forms are normal forms

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self.gb.normal_form(a * b)

    def is_zero(self, a):
        return a.is_zero()

    def gens(self):
        return [self.canon(x) for x in self.poly_ring.gens()]

    def _basis(self):
        if self._dim_basis is None:
            if not self.gb.is_zero_dimensional():
                raise Unsupported(f"{self.name} is infinite-dimensional")
            self._dim_basis = self.gb.standard_monomials()
        return self._dim_basis

    def _coords(self, p: Polynomial, basis):
        F = self.field
        return [p.terms.get(e, F.zero) for e in basis]

    def _solve_inverse(self, a):
        basis = self._basis()
        F = self.field
        cols = [self._coords(self.mul(a, self.poly_ring.monomial(e)), basis) for e in basis]
        A = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
        target = self._coords(self.one, basis)
        x = solve_field(A, target, F)
        if x is None:
            return None
        return self.canon(Polynomial(self.poly_ring, dict(zip(basis, x))))

    def is_unit(self, a):
        return self._solve_inverse(a) is not None

    def inverse(self, a):
        inv = self._solve_inverse(a)
        if inv is None:
            raise NotAUnit(f"{a} is not invertible in {self.name}")
        return inv

    def is_nilpotent(self, a):
        raise Unsupported("use grobner.is_nilpotent_bounded for quotient coefficients")

    def nilpotency_bound(self):
        if self.gb.is_zero_dimensional():
            return max(1, len(self._basis()))
        return None

    def format(self, a):
        return str(a)

    def elements(self):
        if not self.is_finite:
            raise Unsupported(f"{self.name} is infinite")
        basis = self._basis()
        F = self.field
        return [
            Polynomial(self.poly_ring, dict(zip(basis, cs)))
            for cs in product(list(F.elements()), repeat=len(basis))
        ]

    def __str__(self):
        return self.name

    __repr__ = __str__
