"""Commands over a parsed session, each producing a JSON-serializable Report."""
from __future__ import annotations

import json
import shlex
import time
from itertools import product
from dataclasses import dataclass, field

from ..errors import GradedRingError
from ..linalg import smith_normal_form
from ..monoid import (
    AbelianGroup,
    Monoid,
    TableMonoid,
    canonical_map_is_injective,
    grothendieck_group,
    quasi_torsion_contains,
    quasi_zero_submonoid,
    torsion_subgroup,
)
from ..monoidring import RingElement, content_ideal, regrade
from ..structure import (
    FiniteRing,
    annihilator_in_window,
    annihilator_is_graded_in_window,
    check_unit_characterization,
    componentwise_nilpotent_product,
    finite_instance_jacobson_equals_nilradical,
    idempotent_support_in_torsion,
    inverse,
    is_idempotent,
    is_nilpotent,
    is_nilpotent_bruteforce,
    is_unit_monoid_ring,
    is_zero_divisor,
    nilradical_graded_check,
    shrink_trace,
)
from ..suites import SUITES, run_suite
from .parser import SessionDeclaration, format_monoid, format_ring, parse_expression

REPORT_VERSION = "1"
DEFAULT_BOUND = 64


class CommandError(Exception):
    """Bad command usage (unknown command, missing argument, unknown name)."""


@dataclass
class Report:
    command: str
    instance: dict
    verdict: str
    witnesses: dict = field(default_factory=dict)
    seed: int | None = None
    elapsed_ms: float | None = None
    ok: bool = True

    def to_json(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "command": self.command,
            "instance": self.instance,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return dumps(self.to_json())

    def text(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        for k, v in self.witnesses.items():
            if isinstance(v, (dict, list)):
                v = json.dumps(v, ensure_ascii=False)
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# --- argument helpers ---------------------------------------------------------


def _split(args: list[str]) -> tuple[list[str], dict]:
    pos, opts = [], {}
    it = iter(args)
    for a in it:
        if a.startswith("--") and len(a) > 2:
            key = a[2:]
            if "=" in key:
                key, val = key.split("=", 1)
            else:
                val = next(it, None)
                if val is None:
                    raise CommandError(f"option --{key} needs a value")
            opts[key] = val
        else:
            pos.append(a)
    return pos, opts


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise CommandError(f"{what} must be an integer, got {text!r}") from None


def _element(s: SessionDeclaration, name: str) -> RingElement:
    if name in s.bindings:
        return s.bindings[name]
    raise CommandError(f"unknown element {name!r}")


def _monoid(s: SessionDeclaration, name: str) -> Monoid:
    if name in s.monoids:
        return s.monoids[name]
    raise CommandError(f"unknown monoid {name!r}")


def _need(pos: list[str], k: int, usage: str):
    if len(pos) < k:
        raise CommandError(f"usage: {usage}")


def _describe(s: SessionDeclaration, *names: str) -> dict:
    out: dict = {}
    for name in names:
        f = s.bindings[name]
        out.setdefault("ring", format_ring(f.ring))
        out.setdefault("monoid", format_monoid(f.monoid))
        out[name] = str(f)
    return out


def parse_window(M: Monoid, text: str) -> list[tuple]:
    """``a..b`` per coordinate separated by commas, or ``all`` for a finite monoid."""
    if text == "all":
        return list(M.elements())
    ranges = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                ranges.append(range(int(lo), int(hi) + 1))
            else:
                ranges.append(range(int(part), int(part) + 1))
        except ValueError:
            raise CommandError(f"bad window component {part!r}") from None
    if len(ranges) != M.rank:
        raise CommandError(f"window has {len(ranges)} coordinates, monoid {M} needs {M.rank}")
    size = 1
    for r in ranges:
        size *= len(r)
    if size > 4096:
        raise CommandError("window larger than 4096 degrees")
    return [tuple(p) for p in product(*ranges) if M.contains(M.normalize(tuple(p)))]


def _deg(m) -> str:
    return ",".join(map(str, m)) if m else "0"


def _bool(b) -> str:
    return "true" if b else "false"


# --- commands -----------------------------------------------------------------


def cmd_eval(s, pos, opts, ctx):
    _need(pos, 1, "eval EXPR")
    f = parse_expression(" ".join(pos), s)
    inst = {"ring": format_ring(f.ring), "monoid": format_monoid(f.monoid), "expression": " ".join(pos)}
    return Report("", inst, str(f), {"element": f.to_json()})


def cmd_is_unit(s, pos, opts, ctx):
    _need(pos, 1, "is-unit NAME")
    f = _element(s, pos[0])
    cert = check_unit_characterization(f) if f.monoid.is_group else is_unit_monoid_ring(f)
    wit: dict = {}
    if cert.is_unit:
        wit["inverse"] = str(cert.inverse)
        wit["product"] = str(f * cert.inverse)
        verdict = "Unit"
    else:
        verdict = str(cert)
        if cert.witness:
            wit["degrees"] = [_deg(m) for m in cert.witness]
    return Report("", _describe(s, pos[0]), verdict, wit)


def cmd_invert(s, pos, opts, ctx):
    _need(pos, 1, "invert NAME")
    f = _element(s, pos[0])
    g = inverse(f)
    return Report("", _describe(s, pos[0]), str(g), {"inverse": g.to_json(), "product": str(f * g)})


def cmd_is_nilpotent(s, pos, opts, ctx):
    _need(pos, 1, "is-nilpotent NAME")
    f = _element(s, pos[0])
    return Report("", _describe(s, pos[0]), _bool(is_nilpotent(f)))


def cmd_nilpotent_bruteforce(s, pos, opts, ctx):
    _need(pos, 1, "nilpotent-bruteforce NAME [BOUND]")
    f = _element(s, pos[0])
    bound = _int(pos[1], "bound") if len(pos) > 1 else ctx["budget"] or DEFAULT_BOUND
    res = is_nilpotent_bruteforce(f, bound)
    return Report("", _describe(s, pos[0]), str(res), {"bound": bound})


def cmd_is_zero_divisor(s, pos, opts, ctx):
    _need(pos, 1, "is-zero-divisor NAME")
    f = _element(s, pos[0])
    v = is_zero_divisor(f)
    wit = {"annihilator": str(v.witness)} if v.witness is not None else {}
    wit["content_ideal"] = [str(c) for c in content_ideal(f)]
    return Report("", _describe(s, pos[0]), str(v), wit)


def cmd_annihilator(s, pos, opts, ctx):
    _need(pos, 2, "annihilator NAME WINDOW [--coeff-degree D]")
    f = _element(s, pos[0])
    W = parse_window(f.monoid, pos[1])
    deg = _int(opts.get("coeff-degree", "1"), "coeff-degree")
    gens = annihilator_in_window(f, W, deg)
    check = annihilator_is_graded_in_window(f, W, deg)
    wit = {"window": pos[1], "kernel": [str(h) for h in gens]}
    if not check.graded:
        h, m = check.witness
        wit["non_annihilating_component"] = {"element": str(h), "degree": _deg(m), "component": str(h.component(m))}
    inst = _describe(s, pos[0])
    return Report("", inst, "graded" if check.graded else "not-graded", wit)


def cmd_shrink(s, pos, opts, ctx):
    _need(pos, 2, "shrink G F1 [F2 ...]")
    g = _element(s, pos[0])
    gens = [_element(s, n) for n in pos[1:]]
    trace = shrink_trace(g, gens)
    h = trace[-1].element
    wit = {"trace": [st.to_json() for st in trace], "homogeneous": _bool(h.is_homogeneous()), "degree": _deg(h.degree())}
    return Report("", _describe(s, *pos), str(h), wit)


def cmd_is_idempotent(s, pos, opts, ctx):
    _need(pos, 1, "is-idempotent NAME")
    f = _element(s, pos[0])
    idem = is_idempotent(f)
    wit = {"support": [_deg(m) for m in f.support()], "support_in_torsion": _bool(idempotent_support_in_torsion(f))}
    return Report("", _describe(s, pos[0]), _bool(idem), wit)


def cmd_grothendieck(s, pos, opts, ctx):
    _need(pos, 1, "grothendieck MONOID")
    M = _monoid(s, pos[0])
    G, phi = grothendieck_group(M)
    wit = {
        "cancellative": _bool(M.is_cancellative),
        "injective": _bool(canonical_map_is_injective(M)),
        "torsion_free": _bool(G.is_torsion_free),
    }
    if M.is_finite:
        wit["images"] = {M.format(x): _deg(phi(x)) for x in M.elements()}
    else:
        wit["generator_images"] = {_deg(x): _deg(phi(x)) for x in M.generators()}
    return Report("", {"monoid": format_monoid(M)}, format_monoid(G), wit)


def cmd_torsion(s, pos, opts, ctx):
    _need(pos, 1, "torsion MONOID")
    M = _monoid(s, pos[0])
    G = M if isinstance(M, AbelianGroup) else grothendieck_group(M)[0]
    T, _ = torsion_subgroup(G)
    return Report("", {"monoid": format_monoid(M), "group": format_monoid(G)}, format_monoid(T),
                  {"torsion_free": _bool(G.is_torsion_free)})


def cmd_quasi(s, pos, opts, ctx):
    _need(pos, 1, "quasi MONOID")
    M = _monoid(s, pos[0])
    if not isinstance(M, TableMonoid):
        raise CommandError("quasi needs a table monoid")
    zero = [M.format(x) for x in quasi_zero_submonoid(M)]
    tors = [M.format(x) for x in M.elements() if quasi_torsion_contains(M, x)]
    return Report("", {"monoid": format_monoid(M)}, json.dumps(zero), {"quasi_zero": zero, "quasi_torsion": tors})


def cmd_snf(s, pos, opts, ctx):
    _need(pos, 1, "snf MATRIX")
    try:
        A = json.loads(" ".join(pos))
        if not (isinstance(A, list) and A and all(isinstance(r, list) and len(r) == len(A[0]) for r in A)):
            raise ValueError
        A = [[int(v) for v in r] for r in A]
    except (ValueError, TypeError):
        raise CommandError("MATRIX must be a JSON list of equal-length integer rows") from None
    U, D, V = smith_normal_form(A, ncols=len(A[0]))
    diag = [D[i][i] for i in range(min(len(A), len(A[0])))]
    return Report("", {"matrix": A}, json.dumps(diag), {"U": U, "D": D, "V": V})


def cmd_regrade(s, pos, opts, ctx):
    _need(pos, 2, "regrade NAME GRADING")
    f = _element(s, pos[0])
    if pos[1] not in s.gradings:
        raise CommandError(f"unknown grading {pos[1]!r}")
    view = regrade(f, s.gradings[pos[1]])
    comps = {_deg(d): str(view.components[d]) for d in view.degrees()}
    inst = _describe(s, pos[0])
    inst["grading"] = pos[1]
    return Report("", inst, "homogeneous" if view.is_homogeneous() else "not-homogeneous", {"components": comps})


def cmd_componentwise(s, pos, opts, ctx):
    _need(pos, 2, "componentwise F G")
    f, g = _element(s, pos[0]), _element(s, pos[1])
    res = componentwise_nilpotent_product(f, g)
    wit = {"product": str(f * g)}
    if res.witness:
        wit["pair"] = [_deg(m) for m in res.witness]
    return Report("", _describe(s, pos[0], pos[1]), _bool(res.nilpotent), wit)


def cmd_nilradical(s, pos, opts, ctx):
    _need(pos, 1, "nilradical-graded F1 [F2 ...] [--grading PHI] [--bound N]")
    elems = [_element(s, n) for n in pos]
    phi = None
    if "grading" in opts:
        if opts["grading"] not in s.gradings:
            raise CommandError(f"unknown grading {opts['grading']!r}")
        phi = s.gradings[opts["grading"]]
    bound = _int(opts.get("bound", str(ctx["budget"] or DEFAULT_BOUND)), "bound")
    res = nilradical_graded_check(elems, phi, bound)
    wit: dict = {"bound": bound}
    if not res.graded:
        f, d, c = res.witness
        wit["element"] = str(f)
        wit["degree"] = _deg(d)
        wit["component"] = str(c)
    return Report("", _describe(s, *pos), "graded" if res.graded else "not-graded", wit)


def cmd_jacobson(s, pos, opts, ctx):
    _need(pos, 2, "jacobson N K [N2 K2]   ((Z/N)[x]/(x^K), optionally times a second factor)")
    nums = [_int(p, "argument") for p in pos]
    if len(nums) not in (2, 4) or any(v < 1 for v in nums) or nums[0] < 2:
        raise CommandError("give N K or N K N2 K2 with N >= 2, K >= 1")
    rings = [FiniteRing.truncated_polynomial(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)]
    if any(len(r) > 4096 for r in rings):
        raise CommandError("finite ring too large for exhaustive enumeration")
    R = rings[0] if len(rings) == 1 else FiniteRing.product(*rings)
    rep = finite_instance_jacobson_equals_nilradical(R, budget=ctx["budget"] or 10_000)
    wit = {
        "size": len(R),
        "jacobson_size": len(rep.jacobson),
        "nilradical_size": len(rep.nilradical),
        "equal": _bool(rep.equal),
        "nilradical_graded": _bool(rep.nilradical_graded),
        "scope": "finite ring; J computed from its exhaustively enumerated ideal lattice",
    }
    return Report("", {"ring": R.name}, _bool(bool(rep)), wit, ok=bool(rep))


def cmd_suite(s, pos, opts, ctx):
    _need(pos, 1, "suite NAME [--n N] [--trials T] --seed S")
    name = pos[0]
    if name not in SUITES:
        raise CommandError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    seed = ctx["seed"] if "seed" not in opts else _int(opts["seed"], "seed")
    if seed is None:
        raise CommandError("suites need an explicit --seed")
    trials = _int(opts["trials"], "trials") if "trials" in opts else None
    n = _int(opts["n"], "n") if "n" in opts else None
    try:
        res = run_suite(name, seed, trials=trials, n=n)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    verdict = "pass" if res.passed else "fail"
    wit = {k: v for k, v in res.to_json().items() if k not in ("suite", "params", "seed")}
    return Report("", {"suite": name, "params": res.params}, verdict, wit, seed=seed, ok=res.passed)


COMMANDS = {
    "eval": cmd_eval,
    "is-unit": cmd_is_unit,
    "invert": cmd_invert,
    "is-nilpotent": cmd_is_nilpotent,
    "nilpotent-bruteforce": cmd_nilpotent_bruteforce,
    "is-zero-divisor": cmd_is_zero_divisor,
    "annihilator": cmd_annihilator,
    "shrink": cmd_shrink,
    "is-idempotent": cmd_is_idempotent,
    "grothendieck": cmd_grothendieck,
    "torsion": cmd_torsion,
    "quasi": cmd_quasi,
    "snf": cmd_snf,
    "regrade": cmd_regrade,
    "componentwise": cmd_componentwise,
    "nilradical-graded": cmd_nilradical,
    "jacobson": cmd_jacobson,
    "suite": cmd_suite,
}


def run_command(cmd, session: SessionDeclaration | None = None, seed: int | None = None,
                budget: int | None = None, timing: bool = False) -> Report:
    """Run one command (a string or argv list) against a session.

    Library errors (hypothesis violations, non-units, ...) propagate;
    CommandError signals bad usage.
    """
    argv = shlex.split(cmd) if isinstance(cmd, str) else list(cmd)
    if not argv:
        raise CommandError("empty command")
    name, rest = argv[0], argv[1:]
    if name not in COMMANDS:
        raise CommandError(f"unknown command {name!r}; choose from {', '.join(COMMANDS)}")
    session = session if session is not None else SessionDeclaration()
    pos, opts = _split(rest) if name != "eval" else (rest, {})
    ctx = {"seed": seed, "budget": budget}
    start = time.perf_counter()
    report = COMMANDS[name](session, pos, opts, ctx)
    report.command = " ".join(argv)
    if report.seed is None:
        report.seed = seed
    if timing:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def error_report(cmd: str, exc: Exception, seed: int | None = None) -> Report:
    kind = type(exc).__name__
    wit = {"error": kind, "message": str(exc)}
    reason = getattr(exc, "reason", None)
    if isinstance(exc, GradedRingError) and reason:
        wit["reason"] = reason
    return Report(cmd, {}, f"Error({kind})", wit, seed=seed, ok=False)
