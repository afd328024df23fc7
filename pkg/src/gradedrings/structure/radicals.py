"""Nilradical gradedness and Jacobson radicals of small finite rings."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Sequence

from ..errors import BudgetExceeded
from ..monoid import MonoidMorphism
from ..monoidring import RingElement, regrade
from .nilpotence import is_nilpotent_bruteforce


@dataclass(frozen=True)
class NilradicalCheck:
    """``witness`` is (element, degree, component) for the first component that is not nilpotent."""

    graded: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.graded


def nilradical_graded_check(
    nilpotents: Sequence[RingElement], phi: MonoidMorphism | None = None, bound: int = 64
) -> NilradicalCheck:
    """Are all phi-homogeneous components of the given nilpotents nilpotent?

    Each supplied element must itself be nilpotent within ``bound``.  With
    ``phi`` omitted, the grading is the monoid grading itself.  Components
    are examined from the largest degree down.
    """
    for f in nilpotents:
        if not is_nilpotent_bruteforce(f, bound).found:
            raise ValueError(f"{f} is not nilpotent within exponent {bound}")
        if phi is None:
            comps = f.components()
        else:
            comps = regrade(f, phi).components
        for d in sorted(comps, key=(phi.target if phi else f.monoid).key, reverse=True):
            c = comps[d]
            if not is_nilpotent_bruteforce(c, bound).found:
                return NilradicalCheck(False, (f, d, c))
    return NilradicalCheck(True)


class FiniteRing:
    """A finite commutative ring given by exhaustive element lists.

    ``components(x)`` returns the nonzero homogeneous components of x as a
    dict degree -> element.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        add: Callable,
        mul: Callable,
        zero,
        one,
        components: Callable | None = None,
        name: str = "FiniteRing",
    ):
        self.elements = list(elements)
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.components = components or (lambda x: {} if x == zero else {0: x})
        self.name = name

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return self.name

    @classmethod
    def truncated_polynomial(cls, n: int, k: int) -> "FiniteRing":
        """(Z/n)[x]/(x^k), N-graded by degree; elements are coefficient tuples."""
        elems = list(product(range(n), repeat=k))

        def add(a, b):
            return tuple((x + y) % n for x, y in zip(a, b))

        def mul(a, b):
            out = [0] * k
            for i, x in enumerate(a):
                if x:
                    for j in range(k - i):
                        out[i + j] = (out[i + j] + x * b[j]) % n
            return tuple(out)

        def comps(a):
            return {i: tuple(c if j == i else 0 for j in range(k)) for i, c in enumerate(a) if c}

        zero = (0,) * k
        one = (1,) + (0,) * (k - 1)
        return cls(elems, add, mul, zero, one, comps, f"Zmod({n})[x]/(x^{k})")

    @classmethod
    def product(cls, A: "FiniteRing", B: "FiniteRing") -> "FiniteRing":
        """A x B, graded by the pair of gradings (degree (dA, dB) pieces)."""
        elems = [(a, b) for a in A.elements for b in B.elements]

        def comps(x):
            a, b = x
            out = {}
            for d, c in A.components(a).items():
                out[("L", d)] = (c, B.zero)
            for d, c in B.components(b).items():
                out[("R", d)] = (A.zero, c)
            return out

        return cls(
            elems,
            lambda x, y: (A.add(x[0], y[0]), B.add(x[1], y[1])),
            lambda x, y: (A.mul(x[0], y[0]), B.mul(x[1], y[1])),
            (A.zero, B.zero),
            (A.one, B.one),
            comps,
            f"{A} x {B}",
        )

    # ideal theory by enumeration ------------------------------------------
    def principal_ideal(self, x) -> frozenset:
        return frozenset(self.mul(r, x) for r in self.elements)

    def ideal_sum(self, I, J) -> frozenset:
        return frozenset(self.add(a, b) for a in I for b in J)

    def ideals(self, budget: int = 10_000) -> list[frozenset]:
        """All ideals: closure of the principal ideals under sums."""
        found = {self.principal_ideal(x) for x in self.elements}
        frontier = list(found)
        principal = list(found)
        while frontier:
            nxt = []
            for I in frontier:
                for P in principal:
                    S = self.ideal_sum(I, P)
                    if S not in found:
                        found.add(S)
                        nxt.append(S)
                        if len(found) > budget:
                            raise BudgetExceeded(f"more than {budget} ideals in {self}")
            frontier = nxt
        return sorted(found, key=len)

    def maximal_ideals(self, budget: int = 10_000) -> list[frozenset]:
        proper = [I for I in self.ideals(budget) if self.one not in I]
        return [I for I in proper if not any(I < J for J in proper)]

    def jacobson_radical(self, budget: int = 10_000) -> frozenset:
        maxes = self.maximal_ideals(budget)
        out = frozenset(self.elements)
        for I in maxes:
            out &= I
        return out

    def is_nilpotent(self, x) -> bool:
        p = x
        for _ in range(len(self.elements)):
            if p == self.zero:
                return True
            p = self.mul(p, x)
        return p == self.zero

    def nilradical(self) -> frozenset:
        return frozenset(x for x in self.elements if self.is_nilpotent(x))


@dataclass(frozen=True)
class JacobsonReport:
    jacobson: frozenset
    nilradical: frozenset
    nilradical_graded: bool

    @property
    def equal(self) -> bool:
        return self.jacobson == self.nilradical

    def __bool__(self):
        return self.equal and self.nilradical_graded


def finite_instance_jacobson_equals_nilradical(ring: FiniteRing, budget: int = 10_000) -> JacobsonReport:
    """Compare J (intersection of maximal ideals) with N, and test N for gradedness."""
    J = ring.jacobson_radical(budget)
    N = ring.nilradical()
    graded = all(c in N for x in N for c in ring.components(x).values())
    return JacobsonReport(J, N, graded)
