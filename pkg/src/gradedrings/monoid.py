"""Finitely generated commutative monoids and abelian groups.

Elements of every monoid are tuples of ints:

* ``FreeMonoid(k)``: exponent vectors in N^k;
* ``AbelianGroup(r, (n1, ..., nt))``: r free integer coordinates followed by t
  residues, residue i reduced into [0, ni);
* ``Submonoid(ambient, gens)``: elements of the ambient group;
* ``TableMonoid``: 1-tuples ``(index,)`` into the Cayley table.

Canonical group forms come from the Smith normal form of a relation matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import (
    BudgetExceeded,
    HypothesisViolation,
    InvalidElement,
    MembershipUnknown,
    MorphismMismatch,
    NotTorsionFree,
)
from .linalg import IntegerSolver, integer_kernel, smith_normal_form

__all__ = [
    "AbelianGroup",
    "FreeMonoid",
    "Submonoid",
    "TableMonoid",
    "MonoidMorphism",
    "TotalOrder",
    "smith_normal_form",
    "free_abelian_group",
    "monoid_add",
    "monoid_identity",
    "grothendieck_group",
    "torsion_subgroup",
    "compatible_total_order",
    "monoid_order",
    "quasi_torsion_contains",
    "quasi_zero_submonoid",
    "submonoid_contains",
    "is_cancellative",
]

Element = tuple

#: Largest table monoid for which the Grothendieck construction is run.
MAX_TABLE_SIZE = 24


class Monoid:
    """Common interface of the monoid descriptors."""

    rank: int = 0

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def add(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def validate(self, x) -> Element:
        try:
            x = tuple(x)
        except TypeError:
            raise InvalidElement(f"{x!r} is not a coordinate vector") from None
        if len(x) != self.rank or not all(isinstance(c, int) and not isinstance(c, bool) for c in x):
            raise InvalidElement(f"{x!r} is not an element of {self}")
        x = self.normalize(x)
        if not self.contains(x):
            raise InvalidElement(f"{x!r} is not an element of {self}")
        return x

    def normalize(self, x: Element) -> Element:
        return x

    def multiple(self, n: int, x: Element) -> Element:
        out = self.identity
        for _ in range(n):
            out = self.add(out, x)
        return out

    def key(self, x: Element):
        return x

    def generators(self) -> list[Element]:
        raise NotImplementedError

    is_group = False
    is_finite = False

    @property
    def is_cancellative(self) -> bool:
        return True

    def elements(self) -> list[Element]:
        raise HypothesisViolation(f"{self} is infinite", reason="Infinite")

    def format(self, x: Element) -> str:
        return ",".join(map(str, x))


@dataclass(frozen=True)
class AbelianGroup(Monoid):
    """Z^free_rank + Z/n1 + ... + Z/nt with n1 | n2 | ... | nt, each ni >= 2."""

    free_rank: int
    invariants: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariants", tuple(self.invariants))
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        for i, n in enumerate(self.invariants):
            if not isinstance(n, int) or n < 2:
                raise ValueError(f"invariant factors must be >= 2, got {n!r}")
            if i and n % self.invariants[i - 1]:
                raise ValueError(f"invariant factors must form a divisibility chain: {self.invariants}")

    @property
    def rank(self):
        return self.free_rank + len(self.invariants)

    @cached_property
    def _moduli(self):
        return (0,) * self.free_rank + self.invariants

    is_group = True

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def is_torsion_free(self) -> bool:
        return not self.invariants

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for n in self.invariants:
            out *= n
        return out

    def normalize(self, x):
        return tuple(c % m if m else c for c, m in zip(x, self._moduli))

    def contains(self, x):
        return len(x) == self.rank and all(0 <= c < m for c, m in zip(x, self._moduli) if m)

    def add(self, a, b):
        return tuple((x + y) % m if m else x + y for x, y, m in zip(a, b, self._moduli))

    def neg(self, a):
        return tuple(-x % m if m else -x for x, m in zip(a, self._moduli))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def multiple(self, n, x):
        return self.normalize(tuple(n * c for c in x))

    def generators(self):
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def elements(self):
        if self.free_rank:
            return super().elements()
        return [tuple(x) for x in product(*(range(n) for n in self.invariants))]

    def is_torsion_element(self, x) -> bool:
        return all(c == 0 for c in x[: self.free_rank])

    def element_order(self, x) -> int | None:
        if not self.is_torsion_element(x):
            return None
        from math import lcm

        out = 1
        for c, n in zip(x[self.free_rank :], self.invariants):
            out = lcm(out, n // _gcd(c, n))
        return out

    @classmethod
    def from_presentation(cls, ngens: int, relations) -> tuple["AbelianGroup", Callable]:
        """Canonical form of Z^ngens / <relations> and the coordinate map.

        Returns ``(G, coords)`` where ``coords(c)`` sends an integer vector
        c in Z^ngens to the canonical coordinates of its class.
        """
        rel = [list(r) for r in relations if any(r)]
        U, D, V = smith_normal_form(rel, ncols=ngens)
        diag = [D[i][i] for i in range(min(len(rel), ngens))]
        r = sum(1 for d in diag if d)
        torsion = [(i, d) for i, d in enumerate(diag[:r]) if d > 1]
        free = list(range(r, ngens))
        G = cls(len(free), tuple(d for _, d in torsion))

        def coords(c):
            w = [sum(c[k] * V[k][j] for k in range(ngens)) for j in range(ngens)]
            return tuple(w[j] for j in free) + tuple(w[i] % d for i, d in torsion)

        return G, coords

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{n}" for n in self.invariants]
        return " + ".join(parts) if parts else "0"


def free_abelian_group(r: int) -> AbelianGroup:
    return AbelianGroup(r, ())


@dataclass(frozen=True)
class FreeMonoid(Monoid):
    """N^k under addition."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("rank must be >= 0")

    @property
    def rank(self):
        return self.k

    def contains(self, x):
        return len(x) == self.k and all(c >= 0 for c in x)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def multiple(self, n, x):
        return tuple(n * c for c in x)

    def generators(self):
        return [tuple(int(i == j) for j in range(self.k)) for i in range(self.k)]

    def __str__(self):
        return f"N^{self.k}"


@dataclass(frozen=True)
class Submonoid(Monoid):
    """The submonoid of an abelian group generated by ``gens``."""

    ambient: AbelianGroup
    gens: tuple[Element, ...]
    budget: int = field(default=100_000, compare=False)

    def __post_init__(self):
        gens = tuple(self.ambient.validate(g) for g in self.gens)
        if not gens:
            raise ValueError("a submonoid needs at least one generator")
        object.__setattr__(self, "gens", gens)

    @property
    def rank(self):
        return self.ambient.rank

    @property
    def identity(self):
        return self.ambient.identity

    def normalize(self, x):
        return self.ambient.normalize(x)

    def contains(self, x):
        return submonoid_contains(self, x)

    def add(self, a, b):
        return self.ambient.add(a, b)

    def multiple(self, n, x):
        return self.ambient.multiple(n, x)

    def generators(self):
        return list(self.gens)

    def __str__(self):
        gens = " + ".join(f"N({self.ambient.format(g)})" for g in self.gens)
        return f"{gens} in {self.ambient}"


@dataclass(frozen=True)
class TableMonoid(Monoid):
    """A finite commutative monoid given by its Cayley table on indices 0..size-1.

    Associativity, commutativity and the identity law are checked
    exhaustively at construction.  ``labels`` are only used for printing.
    """

    table: tuple[tuple[int, ...], ...]
    identity_index: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise ValueError("Cayley table must be square and nonempty")
        if any(not (0 <= v < n) for row in table for v in row):
            raise ValueError("Cayley table entries must be indices")
        if not 0 <= self.identity_index < n:
            raise ValueError("identity index out of range")
        e = self.identity_index
        for a in range(n):
            if table[e][a] != a:
                raise ValueError(f"identity law fails at {a}")
            for b in range(n):
                if table[a][b] != table[b][a]:
                    raise ValueError(f"table is not commutative at ({a}, {b})")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError(f"table is not associative at ({a}, {b}, {c})")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("need one label per element")

    rank = 1
    is_finite = True

    @property
    def size(self):
        return len(self.table)

    @property
    def identity(self):
        return (self.identity_index,)

    def contains(self, x):
        return len(x) == 1 and 0 <= x[0] < len(self.table)

    def add(self, a, b):
        return (self.table[a[0]][b[0]],)

    def elements(self):
        return [(i,) for i in range(len(self.table))]

    def generators(self):
        return self.elements()

    @cached_property
    def is_group(self):
        n = len(self.table)
        return all(any(self.table[a][b] == self.identity_index for b in range(n)) for a in range(n))

    @cached_property
    def is_cancellative(self):
        n = len(self.table)
        for c in range(n):
            column = [self.table[a][c] for a in range(n)]
            if len(set(column)) != n:
                return False
        return True

    def format(self, x):
        return self.labels[x[0]] if self.labels else str(x[0])

    def __str__(self):
        return f"TableMonoid({len(self.table)})"


class MonoidMorphism:
    """A monoid morphism source -> target.

    Either linear (``matrix`` with ``target.rank`` rows and ``source.rank``
    columns, images reduced in the target) or an arbitrary function.  The
    morphism laws are checked on generators at construction.
    """

    def __init__(self, source: Monoid, target: Monoid, matrix=None, fn=None, name=None, check=True):
        if (matrix is None) == (fn is None):
            raise ValueError("give exactly one of matrix or fn")
        self.source = source
        self.target = target
        self.name = name
        if matrix is not None:
            matrix = tuple(tuple(int(v) for v in row) for row in matrix)
            if len(matrix) != target.rank or any(len(row) != source.rank for row in matrix):
                raise MorphismMismatch(
                    f"matrix shape must be {target.rank}x{source.rank} for {source} -> {target}"
                )
            if isinstance(source, TableMonoid) or isinstance(target, TableMonoid):
                raise MorphismMismatch("table monoids need a function-defined morphism")
        self.matrix = matrix
        self._fn = fn
        if check:
            self.check()

    def __call__(self, x: Element) -> Element:
        if self.matrix is not None:
            y = tuple(sum(a * c for a, c in zip(row, x)) for row in self.matrix)
            return self.target.normalize(y)
        return self._fn(x)

    def check(self):
        s, t = self.source, self.target
        if self(s.identity) != t.identity:
            raise MorphismMismatch("morphism does not preserve the identity")
        gens = s.generators()
        for a in gens:
            if not t.contains(self(a)):
                raise MorphismMismatch(f"image of {a} is not in {t}")
            for b in gens:
                if self(s.add(a, b)) != t.add(self(a), self(b)):
                    raise MorphismMismatch(f"morphism is not additive on ({a}, {b})")
        if isinstance(s, AbelianGroup):
            # torsion generators must land on elements killed by their order
            for i, n in enumerate(s.invariants):
                g = gens[s.free_rank + i]
                if t.multiple(n, self(g)) != t.identity:
                    raise MorphismMismatch(f"generator {g} of order {n} has an image of larger order")

    @classmethod
    def identity_of(cls, M: Monoid) -> "MonoidMorphism":
        return cls(M, M, fn=lambda x: x, name="id", check=False)

    def __eq__(self, other):
        if not isinstance(other, MonoidMorphism):
            return NotImplemented
        if self.matrix is not None or other.matrix is not None:
            return (self.source, self.target, self.matrix) == (other.source, other.target, other.matrix)
        return self is other or (
            self.name is not None and (self.source, self.target, self.name) == (other.source, other.target, other.name)
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix, self.name))

    def __repr__(self):
        label = self.name or (f"matrix={list(map(list, self.matrix))}" if self.matrix else "fn")
        return f"MonoidMorphism({self.source} -> {self.target}, {label})"


def monoid_add(M: Monoid, a, b) -> Element:
    return M.add(M.validate(a), M.validate(b))


def monoid_identity(M: Monoid) -> Element:
    return M.identity


def is_cancellative(M: Monoid) -> bool:
    return M.is_cancellative


# --- Grothendieck groups --------------------------------------------------

_GROTHENDIECK_CACHE: dict = {}


def grothendieck_group(M: Monoid) -> tuple[AbelianGroup, MonoidMorphism]:
    """Canonical form of the Grothendieck group of M and the map m -> [m, 0]."""
    if M in _GROTHENDIECK_CACHE:
        return _GROTHENDIECK_CACHE[M]
    if isinstance(M, AbelianGroup):
        out = (M, MonoidMorphism.identity_of(M))
    elif isinstance(M, FreeMonoid):
        G = free_abelian_group(M.k)
        out = (G, MonoidMorphism(M, G, fn=lambda x: x, name="canonical", check=False))
    elif isinstance(M, Submonoid):
        out = _submonoid_grothendieck(M)
    elif isinstance(M, TableMonoid):
        out = _table_grothendieck(M)
    else:
        raise TypeError(f"unsupported monoid {M!r}")
    _GROTHENDIECK_CACHE[M] = out
    return out


def _submonoid_grothendieck(M: Submonoid):
    A = M.ambient
    s, t, r = len(M.gens), len(A.invariants), A.free_rank
    # columns: generator coefficients c_1..c_s, then torsion slack w_1..w_t
    cols = [list(g) for g in M.gens]
    for i, n in enumerate(A.invariants):
        col = [0] * A.rank
        col[r + i] = n
        cols.append(col)
    matrix = [[cols[j][i] for j in range(s + t)] for i in range(A.rank)]
    kernel = integer_kernel(matrix, ncols=s + t)
    relations = [vec[:s] for vec in kernel]
    G, coords = AbelianGroup.from_presentation(s, relations)
    solver = IntegerSolver(matrix, ncols=s + t)

    def fn(x):
        y = solver.solve(list(x))
        if y is None:
            raise InvalidElement(f"{x} is not in the subgroup generated by {M.gens}")
        return coords(y[:s])

    return G, MonoidMorphism(M, G, fn=fn, name="canonical", check=False)


def _table_grothendieck(M: TableMonoid):
    n = M.size
    if n > MAX_TABLE_SIZE:
        raise BudgetExceeded(f"table monoid of size {n} exceeds {MAX_TABLE_SIZE}")
    T = M.table
    pairs = [(a, b) for a in range(n) for b in range(n)]

    def related(p, q):
        (a, b), (c, d) = p, q
        lhs, rhs = T[a][d], T[b][c]
        return any(T[lhs][m] == T[rhs][m] for m in range(n))

    cls_of: dict = {}
    reps: list = []
    for p in pairs:
        for idx, rep in enumerate(reps):
            if related(p, rep):
                cls_of[p] = idx
                break
        else:
            cls_of[p] = len(reps)
            reps.append(p)
    k = len(reps)

    def plus(i, j):
        (a, b), (c, d) = reps[i], reps[j]
        return cls_of[(T[a][c], T[b][d])]

    e = M.identity_index
    relations = []
    zero = cls_of[(e, e)]
    relations.append([int(i == zero) for i in range(k)])
    for i in range(k):
        for j in range(i, k):
            row = [0] * k
            row[i] += 1
            row[j] += 1
            row[plus(i, j)] -= 1
            relations.append(row)
    G, coords = AbelianGroup.from_presentation(k, relations)

    def fn(x):
        c = cls_of[(x[0], e)]
        return coords([int(i == c) for i in range(k)])

    return G, MonoidMorphism(M, G, fn=fn, name="canonical", check=False)


def canonical_map_is_injective(M: Monoid) -> bool:
    if isinstance(M, TableMonoid):
        _, phi = grothendieck_group(M)
        images = [phi(x) for x in M.elements()]
        return len(set(images)) == len(images)
    return True


def torsion_subgroup(G: AbelianGroup) -> tuple[AbelianGroup, MonoidMorphism]:
    """T(G) (the invariant-factor part) with its embedding into G."""
    H = AbelianGroup(0, G.invariants)
    pad = (0,) * G.free_rank
    emb = MonoidMorphism(H, G, fn=lambda x: pad + tuple(x), name="torsion-embedding")
    return H, emb


# --- orders ---------------------------------------------------------------


class TotalOrder:
    """A translation-invariant total order given by a sort key."""

    def __init__(self, key: Callable, description: str = "lex"):
        self.key = key
        self.description = description

    def lt(self, a, b) -> bool:
        return self.key(a) < self.key(b)

    def le(self, a, b) -> bool:
        return self.key(a) <= self.key(b)

    def min(self, xs: Iterable):
        return min(xs, key=self.key)

    def max(self, xs: Iterable):
        return max(xs, key=self.key)

    def sorted(self, xs: Iterable, reverse=False):
        return sorted(xs, key=self.key, reverse=reverse)


def compatible_total_order(G: AbelianGroup) -> TotalOrder:
    """Lexicographic order on a torsion-free group Z^r."""
    if not G.is_torsion_free:
        raise NotTorsionFree(f"{G} has torsion; it admits no compatible total order")
    return TotalOrder(lambda x: tuple(x), "lex")


def monoid_order(M: Monoid) -> TotalOrder:
    """Compatible total order on a cancellative M with torsion-free Grothendieck group.

    The order is pulled back from the lex order on the Grothendieck group.
    """
    if not M.is_cancellative:
        raise HypothesisViolation(f"{M} is not cancellative", reason="NotCancellative")
    G, phi = grothendieck_group(M)
    compatible_total_order(G)
    if isinstance(M, (AbelianGroup, FreeMonoid)):
        return TotalOrder(lambda x: tuple(x), "lex")
    return TotalOrder(lambda x: phi(x), "lex via Grothendieck group")


# --- submonoids -----------------------------------------------------------


def quasi_torsion_contains(M: Monoid, x) -> bool:
    """Is x in {x : n x + y = y for some n >= 1 and y in M}?"""
    x = M.validate(x)
    if isinstance(M, TableMonoid):
        elems = M.elements()
        p = x
        for _ in range(M.size):
            if any(M.add(p, y) == y for y in elems):
                return True
            p = M.add(p, x)
        return False
    G, phi = grothendieck_group(M)
    return G.is_torsion_element(phi(x))


def quasi_zero_submonoid(M: TableMonoid) -> list[Element]:
    """{x : x + y = y for some y}, by exhaustive search."""
    if not M.is_finite:
        raise HypothesisViolation("quasi_zero_submonoid needs a finite monoid", reason="Infinite")
    elems = M.elements()
    return [x for x in elems if any(M.add(x, y) == y for y in elems)]


def submonoid_contains(M: Submonoid, x, budget: int | None = None) -> bool:
    """Is x a nonnegative integer combination of the generators?

    Decided by a bounded breadth-first search.  When some coordinate
    functional on the free part is positive on every non-torsion generator,
    the search is finite and exact; otherwise it is capped by ``budget`` and
    raises MembershipUnknown.
    """
    A = M.ambient
    if len(x) != A.rank or not A.contains(A.normalize(tuple(x))):
        return False
    x = A.normalize(tuple(x))
    budget = M.budget if budget is None else budget
    r = A.free_rank
    gens = list(M.gens)
    free_gens = [g for g in gens if any(g[:r])]
    functional = None
    for lam in _candidate_functionals(r):
        if all(_dot(lam, g[:r]) > 0 for g in free_gens):
            functional = lam
            break
    limit = _dot(functional, x[:r]) if functional is not None else None
    if limit is not None and limit < 0:
        return False
    seen = {A.identity}
    frontier = [A.identity]
    while frontier:
        if x in seen:
            return True
        nxt = []
        for y in frontier:
            for g in gens:
                z = A.add(y, g)
                if z in seen:
                    continue
                if functional is not None and _dot(functional, z[:r]) > limit:
                    continue
                seen.add(z)
                nxt.append(z)
                if len(seen) > budget:
                    raise MembershipUnknown(f"membership of {x} undecided after {budget} elements")
        frontier = nxt
    return x in seen


def _candidate_functionals(r):
    yield (1,) * r
    for i in range(r):
        for s in (1, -1):
            yield tuple(s if j == i else 0 for j in range(r))


def _dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)
