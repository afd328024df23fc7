"""``gradedrings`` command-line entry point.

    gradedrings run SESSION [COMMAND ...]     run one command, or every "#!" line of SESSION
    gradedrings suite NAME [--n N] [--trials T] --seed S
    gradedrings parse SESSION                 print the canonical form of a session
    gradedrings instance list | run NAME | check

Exit codes: 0 success, 1 a property or fixture check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from ..errors import GradedRingError
from .commands import CommandError, Report, dumps, error_report, run_command
from .parser import SessionError, format_session, parse_session

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def split_directives(text: str) -> list[str]:
    """Commands embedded in a session file as lines starting with ``#!``."""
    return [line[2:].strip() for line in text.splitlines() if line.startswith("#!") and line[2:].strip()]


def read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def run_text(text: str, commands: list[str] | None = None, seed=None, budget=None, timing=False) -> tuple[list[Report], int]:
    """Parse a session and run commands (default: its directives)."""
    session = parse_session(text)
    commands = commands if commands is not None else split_directives(text)
    reports, code = [], EXIT_OK
    for cmd in commands:
        try:
            rep = run_command(cmd, session, seed=seed, budget=budget, timing=timing)
        except (CommandError, SessionError, GradedRingError, ArithmeticError, ValueError) as exc:
            rep = error_report(cmd, exc, seed)
            code = EXIT_USAGE
        if not rep.ok and code == EXIT_OK:
            code = EXIT_FAIL
        reports.append(rep)
    return reports, code


# --- bundled instances ----------------------------------------------------------


def instance_dir():
    return resources.files("gradedrings") / "instances"


def instance_names() -> list[str]:
    return sorted(p.name[: -len(".session")] for p in instance_dir().iterdir() if p.name.endswith(".session"))


def instance_text(name: str) -> str:
    if name not in instance_names():
        raise CommandError(f"unknown instance {name!r}; choose from {', '.join(instance_names())}")
    return (instance_dir() / f"{name}.session").read_text(encoding="utf-8")


def instance_expected(name: str) -> list[dict]:
    return json.loads((instance_dir() / f"{name}.expected.json").read_text(encoding="utf-8"))


def run_instance(name: str) -> tuple[list[Report], int]:
    return run_text(instance_text(name), seed=42)


def check_instances() -> dict[str, bool]:
    out = {}
    for name in instance_names():
        reports, _ = run_instance(name)
        out[name] = [r.to_json() for r in reports] == instance_expected(name)
    return out


# --- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedrings", description="Units, nilpotents, zero-divisors and idempotents in graded monoid rings.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
        sp.add_argument("--seed", type=int, help="seed for randomized commands")
        sp.add_argument("--budget", type=int, help="bound for bounded searches")
        sp.add_argument("--timing", action="store_true", help="record elapsed_ms (reports are then not byte-stable)")

    r = sub.add_parser("run", help="run commands against a session file")
    common(r)
    r.add_argument("session", help="session file, or - for stdin")
    r.add_argument("command", nargs=argparse.REMAINDER, help="command and arguments (default: the file's #! lines)")

    s = sub.add_parser("suite", help="run a property suite")
    common(s)
    s.add_argument("name")
    s.add_argument("--n", type=int)
    s.add_argument("--trials", type=int)

    ps = sub.add_parser("parse", help="print a session in canonical form")
    ps.add_argument("session")

    i = sub.add_parser("instance", help="bundled example instances")
    isub = i.add_subparsers(dest="action", required=True)
    isub.add_parser("list")
    ir = isub.add_parser("run")
    ir.add_argument("name")
    ir.add_argument("--json", metavar="PATH")
    isub.add_parser("check", help="compare every instance with its expected report")
    return p


_GLOBAL_VALUED = ("--json", "--seed", "--budget")


def _hoist_global_options(args) -> None:
    """Move --json/--seed/--budget/--timing written after the command onto ``args``."""
    rest, i = [], 0
    cmd = args.command
    while i < len(cmd):
        tok = cmd[i]
        key, eq, val = tok.partition("=")
        if key in _GLOBAL_VALUED:
            if not eq:
                if i + 1 >= len(cmd):
                    raise CommandError(f"{key} needs a value")
                val = cmd[i + 1]
                i += 1
            if key == "--json":
                args.json = val
            else:
                try:
                    setattr(args, key[2:], int(val))
                except ValueError:
                    raise CommandError(f"{key} expects an integer, got {val!r}") from None
        elif tok == "--timing":
            args.timing = True
        else:
            rest.append(tok)
        i += 1
    args.command = rest


def _emit(reports: list[Report], json_path: str | None, single: bool):
    for rep in reports:
        print(rep.text())
    if json_path:
        payload = reports[0].to_json() if single and len(reports) == 1 else [r.to_json() for r in reports]
        data = dumps(payload)
        if json_path == "-":
            sys.stdout.write(data)
        else:
            Path(json_path).write_text(data, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.cmd == "run":
            _hoist_global_options(args)
            text = read_source(args.session)
            cmds = [" ".join(args.command)] if args.command else None
            reports, code = run_text(text, cmds, args.seed, args.budget, args.timing)
            _emit(reports, args.json, single=bool(args.command))
            return code
        if args.cmd == "suite":
            cmd = ["suite", args.name]
            for opt in ("n", "trials"):
                if getattr(args, opt) is not None:
                    cmd += [f"--{opt}", str(getattr(args, opt))]
            if args.seed is None:
                raise CommandError("suites need an explicit --seed")
            rep = run_command(cmd, seed=args.seed, timing=args.timing)
            _emit([rep], args.json, single=True)
            return EXIT_OK if rep.ok else EXIT_FAIL
        if args.cmd == "parse":
            sys.stdout.write(format_session(parse_session(read_source(args.session))))
            return EXIT_OK
        if args.cmd == "instance":
            if args.action == "list":
                for name in instance_names():
                    print(name)
                return EXIT_OK
            if args.action == "run":
                reports, code = run_instance(args.name)
                _emit(reports, args.json, single=False)
                return code
            results = check_instances()
            for name, ok in results.items():
                print(f"{'PASS' if ok else 'FAIL'} {name}")
            return EXIT_OK if all(results.values()) else EXIT_FAIL
    except (CommandError, SessionError, GradedRingError, OSError) as exc:
        print(f"gradedrings: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE
