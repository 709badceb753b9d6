"""Command-line front end.

Every command writes a single JSON document to standard output (an
``{"error": ...}`` document when something goes wrong); diagnostics go to
standard error only.  Exit codes: 0 success, 1 invalid input, 2 when a
documented precondition or resource limit fails.  Identical invocations
with identical seeds produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .core import SHAPE_CYCLE, SHAPE_PATH
from .cycle import solve_cycle
from .dynamics import run_dynamics
from .errors import BadParameter, InputError, InternalError, LimitError
from .general import DEFAULT_FEEDBACK_BUDGET, minimum_feedback_set, solve_general
from .generators import (
    gen_example1,
    gen_ktt,
    gen_oscillator,
    gen_random,
    gen_two_triangles,
)
from .oracle import DEFAULT_ENUMERATION_LIMIT, oracle_search
from .path import solve_path
from .stability import check

try:
    from importlib.metadata import version as _pkg_version

    _VERSION = _pkg_version("seatswap")
except Exception:  # pragma: no cover - metadata missing in odd setups
    _VERSION = "unknown"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise BadParameter(f"{what} must be an integer, got {text!r}") from None


def _parse_float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise BadParameter(f"{what} must be a number, got {text!r}") from None


def _parse_distance(text: str) -> int | None:
    if text == "unbounded":
        return None
    bound = _parse_int(text, "distance")
    if bound < 1:
        raise BadParameter("distance must be a positive integer or 'unbounded'")
    return bound


def _parse_policy(text: str) -> tuple[str, int | None]:
    if text == "first":
        return "first", None
    if text.startswith("random:"):
        return "random", _parse_int(text.split(":", 1)[1], "policy seed")
    raise BadParameter(f"policy must be 'first' or 'random:SEED', got {text!r}")


def _cmd_solve(args: argparse.Namespace) -> tuple[dict, int]:
    inst = formats.parse_instance(_read_text(args.instance))
    method = args.method
    if method == "auto":
        if inst.seats.shape_tag == SHAPE_CYCLE:
            method = "cycle"
        elif inst.seats.shape_tag == SHAPE_PATH:
            method = "path"
        else:
            method = "general"
    if method == "cycle":
        asg = solve_cycle(inst)
        bound: int | None = 1
    elif method == "path":
        seed = inst.index(args.seed) if args.seed is not None else 0
        asg = solve_path(inst, seed)
        bound = 2
    else:
        if args.dfvs is not None:
            labels = [piece for piece in args.dfvs.split(",") if piece]
            feedback = sorted({inst.index(lab) for lab in labels})
        else:
            feedback = sorted(
                minimum_feedback_set(inst.prefs, args.dfvs_budget).vertices
            )
        asg = solve_general(inst, feedback, args.dfvs_budget)
        bound = None if not feedback else 1
    report = check(inst, asg, bound)
    doc = {
        "method": method,
        "assignment": formats.assignment_to_document(inst, asg)["assignment"],
        "report": formats.report_to_document(inst, report),
    }
    return doc, 0 if report.stable else 2


def _cmd_check(args: argparse.Namespace) -> tuple[dict, int]:
    inst = formats.parse_instance(_read_text(args.instance))
    asg = formats.parse_assignment(_read_text(args.assignment), inst)
    report = check(inst, asg, _parse_distance(args.distance))
    # The verdict is data, not an error: exit 0 either way.
    return formats.report_to_document(inst, report), 0


def _cmd_oracle(args: argparse.Namespace) -> tuple[dict, int]:
    inst = formats.parse_instance(_read_text(args.instance))
    bound = _parse_distance(args.distance)
    result = oracle_search(inst, bound, args.mode, limit=args.limit)
    if args.mode == "exists":
        return {"exists": result}, 0
    if args.mode == "count":
        return {"count": result}, 0
    assignments = [
        formats.assignment_to_document(inst, asg)["assignment"] for asg in result
    ]
    return {"assignments": assignments}, 0


def _cmd_dynamics(args: argparse.Namespace) -> tuple[dict, int]:
    inst = formats.parse_instance(_read_text(args.instance))
    start = formats.parse_assignment(_read_text(args.assignment), inst)
    policy, seed = _parse_policy(args.policy)
    trace = run_dynamics(inst, start, policy=policy, seed=seed, max_steps=args.max_steps)
    return formats.trace_to_document(inst, trace), 0


def _cmd_gen(args: argparse.Namespace) -> tuple[dict, int]:
    spec = args.family
    bundled = None
    if spec.startswith("ktt:"):
        inst = gen_ktt(_parse_int(spec[4:], "t"))
    elif spec == "two-triangles":
        inst = gen_two_triangles()
    elif spec == "prop1":
        inst, bundled = gen_oscillator()
    elif spec == "example1":
        inst, bundled = gen_example1()
    elif spec.startswith("random:"):
        parts = spec[len("random:") :].split(",")
        if len(parts) not in (3, 4):
            raise BadParameter("random family needs N,P,SEED with an optional shape")
        shape = parts[3] if len(parts) == 4 else "cycle"
        if shape == "custom":
            raise BadParameter("custom random shapes need the library API")
        inst = gen_random(
            _parse_int(parts[0], "n"),
            _parse_float(parts[1], "p"),
            shape,
            _parse_int(parts[2], "seed"),
        )
    else:
        raise BadParameter(f"unknown family {spec!r}")
    doc = formats.instance_to_document(inst)
    if bundled is not None:
        doc["assignment"] = formats.assignment_to_document(inst, bundled)["assignment"]
    if args.out is not None:
        Path(args.out).write_text(formats.dumps(doc, args.pretty) + "\n")
    return doc, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seatswap",
        description="Compute, verify, and stress-test swap-stable seat assignments.",
    )
    parser.add_argument("--version", action="version", version=f"seatswap {_VERSION}")
    sub = parser.add_subparsers(dest="command")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p_solve = sub.add_parser("solve", help="compute a stable assignment")
    p_solve.add_argument("--instance", required=True, help="instance JSON file or -")
    p_solve.add_argument(
        "--method", choices=("auto", "cycle", "path", "general"), default="auto"
    )
    p_solve.add_argument("--seed", help="seed agent label (path method)")
    p_solve.add_argument(
        "--dfvs", help="comma-separated feedback agents (general method)"
    )
    p_solve.add_argument(
        "--dfvs-budget", type=int, default=DEFAULT_FEEDBACK_BUDGET,
        help="max agent count for exact feedback-set search",
    )
    common(p_solve)
    p_solve.set_defaults(handler=_cmd_solve)

    p_check = sub.add_parser("check", help="verdict for a given assignment")
    p_check.add_argument("--instance", required=True)
    p_check.add_argument("--assignment", required=True)
    p_check.add_argument("--distance", default="1", help="1, 2, ... or 'unbounded'")
    common(p_check)
    p_check.set_defaults(handler=_cmd_check)

    p_oracle = sub.add_parser("oracle", help="exhaustive search on small instances")
    p_oracle.add_argument("--instance", required=True)
    p_oracle.add_argument("--distance", default="1")
    p_oracle.add_argument(
        "--mode", choices=("exists", "count", "enumerate"), default="exists"
    )
    p_oracle.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT)
    common(p_oracle)
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_dyn = sub.add_parser("dynamics", help="run swap dynamics from an assignment")
    p_dyn.add_argument("--instance", required=True)
    p_dyn.add_argument("--assignment", required=True)
    p_dyn.add_argument("--policy", default="first", help="'first' or 'random:SEED'")
    p_dyn.add_argument("--max-steps", type=int, default=None)
    common(p_dyn)
    p_dyn.set_defaults(handler=_cmd_dynamics)

    p_gen = sub.add_parser("gen", help="generate a named or random instance")
    p_gen.add_argument(
        "--family",
        required=True,
        help="ktt:T | two-triangles | prop1 | example1 | random:N,P,SEED[,SHAPE]",
    )
    p_gen.add_argument("--out", help="also write the document to this file")
    common(p_gen)
    p_gen.set_defaults(handler=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "handler", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    pretty = getattr(args, "pretty", False)
    try:
        doc, code = args.handler(args)
    except (InputError, OSError) as exc:
        _emit_error(exc, pretty)
        return 1
    except (LimitError, InternalError) as exc:
        _emit_error(exc, pretty)
        return 2
    print(formats.dumps(doc, pretty))
    return code


def _emit_error(exc: Exception, pretty: bool) -> None:
    doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    print(formats.dumps(doc, pretty))
    print(f"error: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
