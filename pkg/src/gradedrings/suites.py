"""Randomized and exhaustive property suites.

Every trial draws from its own stream ``random.Random(f"{seed}:{trial}")``,
so a trial's outcome depends only on (seed, trial index) and never on the
order in which trials run.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .coeffring import IntegersMod, crt_decompose, radical
from .errors import GradedRingError
from .linalg import determinant, matmul, smith_normal_form
from .monoid import AbelianGroup, FreeMonoid, free_abelian_group
from .monoidring import MonoidRing, RingElement
from .structure import (
    annihilator_in_window,
    check_unit_characterization,
    componentwise_nilpotent_product,
    enumerate_window,
    invert_group_ring,
    is_idempotent,
    is_nilpotent,
    is_nilpotent_bruteforce,
    is_zero_divisor,
    windowed_inverse,
)

#: Default trial counts per suite.
DEFAULT_TRIALS = {
    "mccoy": 500,
    "units": 500,
    "nilpotence": 500,
    "componentwise": 500,
    "snf": 200,
    "homogeneous-components": 500,
}


@dataclass
class SuiteResult:
    name: str
    params: dict
    seed: int
    trials: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures

    def count(self, key: str):
        self.stats[key] = self.stats.get(key, 0) + 1

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "params": self.params,
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
            "stats": dict(sorted(self.stats.items())),
        }


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _run(result: SuiteResult, cases, check: Callable) -> SuiteResult:
    """Run check(case) -> None | str for each (label, case); record failures."""
    for label, case in cases:
        result.trials += 1
        try:
            msg = check(case, result)
        except (GradedRingError, AssertionError, ArithmeticError) as exc:
            msg = f"{type(exc).__name__}: {exc}"
        if msg:
            result.failures.append({"trial": label, "input": str(case), "error": msg})
    return result


# --- McCoy agreement -------------------------------------------------------


def suite_mccoy(n: int = 6, trials: int | None = None, seed: int = 42) -> SuiteResult:
    """Constant-annihilator verdict agrees with the windowed linear solve.

    f ranges over (Z/n)[x] with support in {0..3}; the window is {0..6}.
    Without ``trials`` the suite is exhaustive when n^4 <= 4096.
    """
    P = MonoidRing(IntegersMod(n), FreeMonoid(1))
    degrees = [(i,) for i in range(4)]
    window = [(i,) for i in range(7)]
    exhaustive = trials is None and n**4 <= 4096
    if exhaustive:
        cases = ((i, P.element(zip(degrees, cs))) for i, cs in enumerate(product(range(n), repeat=4)))
    else:
        count = trials if trials is not None else DEFAULT_TRIALS["mccoy"]

        def gen():
            for t in range(count):
                rng = trial_rng(seed, t)
                yield t, P.element((d, rng.randrange(n)) for d in degrees)

        cases = gen()

    def check(f: RingElement, res):
        zd = is_zero_divisor(f).is_zero_divisor
        ker = annihilator_in_window(f, window)
        res.count("zero-divisor" if zd else "regular")
        if zd != bool(ker):
            return f"is_zero_divisor={zd} but window kernel has {len(ker)} generators"
        return None

    params = {"n": n, "support": "0..3", "window": "0..6", "mode": "exhaustive" if exhaustive else "random"}
    return _run(SuiteResult("mccoy", params, seed), cases, check)


def suite_homogeneous_components(n: int = 6, trials: int | None = None, seed: int = 42) -> SuiteResult:
    """Every homogeneous component of a zero-divisor is a zero-divisor."""
    P = MonoidRing(IntegersMod(n), FreeMonoid(1))
    count = trials if trials is not None else DEFAULT_TRIALS["homogeneous-components"]
    nonunits = [c for c in range(n) if c and IntegersMod(n).is_unit(c) is False]

    def gen():
        for t in range(count):
            rng = trial_rng(seed, t)
            # bias towards zero-divisors: a common factor of n in every coefficient
            pool = nonunits if rng.random() < 0.7 and nonunits else list(range(n))
            yield t, P.element(((i,), rng.choice(pool + [0])) for i in range(4))

    def check(f: RingElement, res):
        if not is_zero_divisor(f):
            res.count("regular")
            return None
        res.count("zero-divisor")
        for m, c in f.components().items():
            if not is_zero_divisor(c):
                return f"component at {m} is not a zero-divisor"
        return None

    return _run(SuiteResult("homogeneous-components", {"n": n}, seed), gen(), check)


# --- units of (Z/n)[Z] -----------------------------------------------------

UNIT_MODULI = (4, 6, 8, 12)


def random_laurent_unit(P: MonoidRing, rng: random.Random) -> RingElement:
    """A unit of (Z/n)[x, x^-1] with support in {-2..2}, built prime by prime.

    Modulo each prime power p^k pick a unit a_p, a degree x_p and a
    p-divisible perturbation; glue the pieces with CRT idempotents.
    """
    n = P.coeffs.n
    terms: dict = {}
    for comp in crt_decompose(n):
        q = comp.modulus
        a = rng.choice([u for u in range(1, q) if u % comp.p])
        x = rng.randint(-2, 2)
        piece = {(x,): a}
        for d in range(-2, 3):
            if rng.random() < 0.5:
                piece[(d,)] = (piece.get((d,), 0) + comp.p * rng.randrange(q)) % q
        for m, c in piece.items():
            terms[m] = (terms.get(m, 0) + c * comp.coefficient) % n
    return P.element(terms.items())


def suite_units(trials: int | None = None, seed: int = 42, moduli=UNIT_MODULI) -> SuiteResult:
    """Unit verdict, CRT inversion and windowed inverse search all agree."""
    G = free_abelian_group(1)
    count = trials if trials is not None else DEFAULT_TRIALS["units"]
    window = [(i,) for i in range(-10, 11)]

    def gen():
        for t in range(count):
            rng = trial_rng(seed, t)
            n = moduli[t % len(moduli)]
            P = MonoidRing(IntegersMod(n), G)
            if t % 2 == 0:
                f = random_laurent_unit(P, rng)
            else:
                f = P.element(((d,), rng.randrange(n)) for d in range(-2, 3))
            yield t, f

    def check(f: RingElement, res):
        cert = check_unit_characterization(f)
        res.count("unit" if cert.is_unit else f"not-unit:{cert.reason}")
        try:
            inv = invert_group_ring(f)
            inverted = f * inv == 1
        except ArithmeticError:
            inverted = False
        found = windowed_inverse(f, window)
        if cert.is_unit and f * cert.inverse != 1:
            return "certificate inverse does not check"
        if not (cert.is_unit == inverted == (found is not None)):
            return f"certificate={cert.is_unit} crt={inverted} window={found is not None}"
        return None

    return _run(SuiteResult("units", {"moduli": list(moduli), "support": "-2..2", "window": "-10..10"}, seed), gen(), check)


# --- nilpotence in (Z/12)[x] ----------------------------------------------


def suite_nilpotence(n: int = 12, trials: int | None = None, seed: int = 42, bound: int = 64) -> SuiteResult:
    """Coefficientwise nilpotence agrees with repeated multiplication up to ``bound``."""
    P = MonoidRing(IntegersMod(n), FreeMonoid(1))
    r = radical(n)
    nil = list(range(0, n, r))
    count = trials if trials is not None else DEFAULT_TRIALS["nilpotence"]

    def gen():
        for t in range(count):
            rng = trial_rng(seed, t)
            size = rng.randint(1, 5)
            terms = []
            for _ in range(size):
                c = rng.choice(nil) if rng.random() < 0.8 else rng.randrange(n)
                terms.append(((rng.randint(0, 4),), c))
            yield t, P.element(terms)

    def check(f: RingElement, res):
        a = is_nilpotent(f)
        b = is_nilpotent_bruteforce(f, bound).found
        res.count("nilpotent" if a else "not-nilpotent")
        if a != b:
            return f"coefficient test {a} vs brute force {b}"
        return None

    return _run(SuiteResult("nilpotence", {"n": n, "bound": bound}, seed), gen(), check)


# --- componentwise nilpotent products -------------------------------------


def suite_componentwise(n: int = 12, trials: int | None = None, seed: int = 42) -> SuiteResult:
    """fg nilpotent iff all coefficient products are, over (Z/n)[x, x^-1]."""
    P = MonoidRing(IntegersMod(n), free_abelian_group(1))
    zd = [c for c in range(n) if not IntegersMod(n).is_unit(c)]
    count = trials if trials is not None else DEFAULT_TRIALS["componentwise"]

    def rand_elem(rng):
        return P.element(
            ((rng.randint(-2, 2),), rng.choice(zd) if rng.random() < 0.8 else rng.randrange(n))
            for _ in range(rng.randint(1, 3))
        )

    def gen():
        for t in range(count):
            rng = trial_rng(seed, t)
            yield t, (rand_elem(rng), rand_elem(rng))

    def check(case, res):
        f, g = case
        out = componentwise_nilpotent_product(f, g)
        res.count("nilpotent" if out.nilpotent else "not-nilpotent")
        return None

    return _run(SuiteResult("componentwise", {"n": n, "support": "-2..2"}, seed), gen(), check)


# --- Smith normal form ------------------------------------------------------


def check_smith_form(A) -> str | None:
    """None if smith_normal_form(A) satisfies every contract, else a message."""
    m = len(A)
    n = len(A[0]) if m else 0
    U, D, V = smith_normal_form(A, ncols=n)
    if matmul(matmul(U, A), V) != D:
        return "U*A*V != D"
    if abs(determinant(U)) != 1 or abs(determinant(V)) != 1:
        return "transformation not unimodular"
    for i in range(m):
        for j in range(n):
            if i != j and D[i][j]:
                return f"off-diagonal entry at ({i},{j})"
    diag = [D[i][i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return "negative diagonal entry"
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            return f"divisibility chain broken: {diag}"
    return None


def suite_snf(trials: int | None = None, seed: int = 42, max_size: int = 6, entry_bound: int = 20) -> SuiteResult:
    count = trials if trials is not None else DEFAULT_TRIALS["snf"]

    def gen():
        for t in range(count):
            rng = trial_rng(seed, t)
            m, k = rng.randint(1, max_size), rng.randint(1, max_size)
            density = rng.choice([0.3, 0.7, 1.0])
            A = [
                [rng.randint(-entry_bound, entry_bound) if rng.random() < density else 0 for _ in range(k)]
                for _ in range(m)
            ]
            yield t, A

    def check(A, res):
        msg = check_smith_form(A)
        if msg is None:
            rank = sum(1 for d in smith_normal_form(A).diagonal if d)
            res.count(f"rank {rank}")
        return msg

    params = {"max_size": max_size, "entries": f"-{entry_bound}..{entry_bound}"}
    return _run(SuiteResult("snf", params, seed), gen(), check)


# --- idempotents of (Z/6)[x, x^-1] ------------------------------------------


def suite_idempotent_location(n: int = 6, radius: int = 2, seed: int = 42) -> SuiteResult:
    """Exhaustive: every idempotent with support in {-radius..radius} is a constant."""
    P = MonoidRing(IntegersMod(n), free_abelian_group(1))
    window = [(i,) for i in range(-radius, radius + 1)]
    found = []

    def check(f, res):
        if is_idempotent(f):
            found.append(f)
            if any(m != (0,) for m in f.terms):
                return "idempotent with nonzero degree in its support"
        return None

    res = _run(
        SuiteResult("idempotent-location", {"n": n, "support": f"-{radius}..{radius}"}, seed),
        ((i, f) for i, f in enumerate(enumerate_window(P, window))),
        check,
    )
    res.stats["idempotents"] = sorted(str(f) for f in found)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "mccoy": suite_mccoy,
    "units": suite_units,
    "nilpotence": suite_nilpotence,
    "componentwise": suite_componentwise,
    "snf": suite_snf,
    "idempotent-location": suite_idempotent_location,
    "homogeneous-components": suite_homogeneous_components,
}


def run_suite(name: str, seed: int, trials: int | None = None, n: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    kwargs: dict = {"seed": seed}
    if name != "idempotent-location":
        kwargs["trials"] = trials
    elif trials is not None:
        raise ValueError("the idempotent-location suite is exhaustive; it takes no trial count")
    if n is not None:
        if name in ("units", "snf"):
            raise ValueError(f"suite {name} takes no --n")
        kwargs["n"] = n
    return SUITES[name](**kwargs)
