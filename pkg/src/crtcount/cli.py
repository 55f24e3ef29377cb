"""Command-line front end.

Subcommands: solve, count, bound, extremal, tightness, runner. Each prints a
human-readable report by default, or a single JSON record on stdout with
--json. Exit status is 0 on success, 1 when the system has no solution or the
request is infeasible, and 2 on usage errors and overflow refusals.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .bounds import (
    InfeasibleError,
    bound_arbitrary,
    bound_intervals,
    extremal_profile,
    extremal_sum,
    tightness_instance,
)
from .congruence import (
    Congruence,
    CongruenceSystem,
    OverflowLimitError,
    checked_mul,
    solve,
)
from .residues import (
    CyclicInterval,
    EnumerationCapError,
    ResidueSet,
    enumerate_solutions,
    exact_count,
)
from .runner import RunnerPair, two_runner_witness


def parse_collection(text: str, modulus: int) -> ResidueSet | CyclicInterval:
    """Parse "{r1,r2,...}" as an explicit set or "start+len" as a cyclic interval.

    Residues and starts are normalized mod modulus; duplicates after
    normalization and lengths outside [0, modulus] are rejected with the
    offending token named.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if text.startswith("{") and text.endswith("}"):
        body = text[1:-1].strip()
        members: list[int] = []
        seen: set[int] = set()
        if body:
            for token in body.split(","):
                token = token.strip()
                try:
                    value = int(token)
                except ValueError:
                    raise ValueError(
                        f"malformed residue {token!r} in {text!r}"
                    ) from None
                residue = value % modulus
                if residue in seen:
                    raise ValueError(
                        f"duplicate residue {token!r} in {text!r} (mod {modulus})"
                    )
                seen.add(residue)
                members.append(residue)
        return ResidueSet(modulus=modulus, members=tuple(members))
    head, sep, length_text = text[1:].partition("+")  # skip a leading sign on start
    if sep:
        start_text = text[:1] + head
        try:
            start = int(start_text)
            length = int(length_text)
        except ValueError:
            raise ValueError(f"malformed interval {text!r}") from None
        if not 0 <= length <= modulus:
            raise ValueError(
                f"length {length_text!r} out of range [0, {modulus}] in {text!r}"
            )
        return CyclicInterval(modulus=modulus, start=start, length=length)
    raise ValueError(
        f"collection {text!r} matches neither '{{r1,r2,...}}' nor 'start+len'"
    )


def _parse_congruence(token: str) -> Congruence:
    residue_text, sep, modulus_text = token.partition(":")
    if not sep:
        raise ValueError(f"congruence {token!r} is not of the form 'a:m'")
    try:
        residue = int(residue_text)
        modulus = int(modulus_text)
    except ValueError:
        raise ValueError(f"congruence {token!r} is not of the form 'a:m'") from None
    return Congruence(residue, modulus)


def _parse_speeds(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"speeds {text!r} must be two comma-separated integers")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(
            f"speeds {text!r} must be two comma-separated integers"
        ) from None


def _emit(args: argparse.Namespace, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def _cmd_solve(args: argparse.Namespace) -> int:
    system = CongruenceSystem(
        tuple(_parse_congruence(token) for token in args.congruences)
    )
    found = solve(system)
    if found is None:
        _emit(args, {"status": "no-solution"}, ["no solution"])
        return 1
    _emit(
        args,
        {"status": "ok", "residue": found.residue, "modulus": found.modulus},
        [f"x ≡ {found.residue} (mod {found.modulus})"],
    )
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    first = parse_collection(args.collection_a, args.m)
    second = parse_collection(args.collection_b, args.n)
    how_many = exact_count(first, second)
    span = checked_mul(args.m // math.gcd(args.m, args.n), args.n)
    record: dict = {"status": "ok", "count": how_many, "modulus": span}
    lines = [f"count = {how_many}", f"modulus = {span}"]
    if args.enumerate:
        solutions = enumerate_solutions(first, second)
        record["solutions"] = [cls.residue for cls in solutions]
        lines.append("solutions = " + " ".join(str(cls.residue) for cls in solutions))
    _emit(args, record, lines)
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.mode == "arbitrary":
        result = bound_arbitrary(args.m, args.n, args.size_a, args.size_b)
        _emit(
            args,
            {"status": "ok", "bound": result.lower_bound, "case": result.case_tag},
            [f"bound = {result.lower_bound}", f"case = {result.case_tag}"],
        )
    else:
        value = bound_intervals(args.m, args.n, args.size_a, args.size_b)
        _emit(args, {"status": "ok", "bound": value}, [f"bound = {value}"])
    return 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    profile_a = extremal_profile(args.size_a, args.cap_a, args.length)
    profile_b = extremal_profile(args.size_b, args.cap_b, args.length)
    result = extremal_sum(args.size_a, args.cap_a, args.size_b, args.cap_b, args.length)
    record = {
        "status": "ok",
        "profile_a": list(profile_a.values),
        "profile_b": list(profile_b.values),
        "bound": result.lower_bound,
        "case": result.case_tag,
    }
    lines = [
        "profile_a = " + " ".join(str(v) for v in profile_a.values),
        "profile_b = " + " ".join(str(v) for v in profile_b.values),
        f"bound = {result.lower_bound}",
        f"case = {result.case_tag}",
    ]
    _emit(args, record, lines)
    return 0


def _cmd_tightness(args: argparse.Namespace) -> int:
    first, second = tightness_instance(args.scale)
    how_many = exact_count(first, second)
    record = {
        "status": "ok",
        "m": first.modulus,
        "n": second.modulus,
        "interval_a": {
            "modulus": first.modulus,
            "start": first.start,
            "length": first.length,
        },
        "interval_b": {
            "modulus": second.modulus,
            "start": second.start,
            "length": second.length,
        },
        "count": how_many,
    }
    lines = [
        f"m = {first.modulus}",
        f"n = {second.modulus}",
        f"A = {first.start}+{first.length} (mod {first.modulus})",
        f"B = {second.start}+{second.length} (mod {second.modulus})",
        f"count = {how_many}",
    ]
    _emit(args, record, lines)
    return 0


def _cmd_runner(args: argparse.Namespace) -> int:
    speed_m, speed_n = _parse_speeds(args.speeds)
    witness = two_runner_witness(RunnerPair(speed_m, speed_n))
    first, second = witness.distances
    record = {
        "status": "ok",
        "witness_numerator": witness.time.numerator,
        "witness_denominator": witness.time.denominator,
        "distances": [
            {"numerator": first.numerator, "denominator": first.denominator},
            {"numerator": second.numerator, "denominator": second.denominator},
        ],
    }
    _emit(args, record, [f"t = {witness.time}, distances {first}, {second}"])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crtcount",
        description=(
            "Exact solution counts and lower bounds for pairs of congruence "
            "collections, plus a two-runner distant-time search."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit one JSON record instead of text"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    p_solve = subparsers.add_parser(
        "solve", parents=[common], help="solve a system of congruences"
    )
    p_solve.add_argument(
        "congruences", nargs="+", metavar="a:m", help="congruence x ≡ a (mod m)"
    )
    p_solve.set_defaults(handler=_cmd_solve)

    p_count = subparsers.add_parser(
        "count",
        parents=[common],
        help="count common solutions of two residue collections",
    )
    p_count.add_argument("m", type=int, help="first modulus")
    p_count.add_argument("n", type=int, help="second modulus")
    p_count.add_argument(
        "collection_a", metavar="A", help="collection mod m: {r1,r2,...} or start+len"
    )
    p_count.add_argument(
        "collection_b", metavar="B", help="collection mod n: {r1,r2,...} or start+len"
    )
    p_count.add_argument(
        "--enumerate", action="store_true", help="also list the solution residues"
    )
    p_count.set_defaults(handler=_cmd_count)

    p_bound = subparsers.add_parser(
        "bound",
        parents=[common],
        help="lower bound on the solution count from sizes alone",
    )
    p_bound.add_argument("mode", choices=("arbitrary", "interval"))
    p_bound.add_argument("m", type=int, help="first modulus")
    p_bound.add_argument("n", type=int, help="second modulus")
    p_bound.add_argument("size_a", type=int, help="size of the first collection")
    p_bound.add_argument("size_b", type=int, help="size of the second collection")
    p_bound.set_defaults(handler=_cmd_bound)

    p_extremal = subparsers.add_parser(
        "extremal",
        parents=[common],
        help="worst-case count profiles and their pairing sum",
    )
    p_extremal.add_argument("size_a", type=int)
    p_extremal.add_argument("cap_a", type=int)
    p_extremal.add_argument("size_b", type=int)
    p_extremal.add_argument("cap_b", type=int)
    p_extremal.add_argument("length", type=int)
    p_extremal.set_defaults(handler=_cmd_extremal)

    p_tight = subparsers.add_parser(
        "tightness",
        parents=[common],
        help="one-third-density interval pair with no common solution",
    )
    p_tight.add_argument(
        "--M",
        dest="scale",
        type=int,
        required=True,
        help="scale factor; moduli are 3M and 6M",
    )
    p_tight.set_defaults(handler=_cmd_tightness)

    p_runner = subparsers.add_parser(
        "runner",
        parents=[common],
        help="time keeping two runners at distance >= 1/3 from the origin",
    )
    p_runner.add_argument(
        "--speeds", required=True, metavar="M,N", help="two distinct positive speeds"
    )
    p_runner.set_defaults(handler=_cmd_runner)

    return parser


def _report_error(json_mode: bool, message: str) -> None:
    if json_mode:
        print(json.dumps({"status": "error", "message": message}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, dispatch, and return the exit status without exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return int(exc.code or 0)
    json_mode = bool(getattr(args, "json", False))
    try:
        return args.handler(args)
    except InfeasibleError as exc:
        _report_error(json_mode, str(exc))
        return 1
    except (OverflowLimitError, EnumerationCapError) as exc:
        _report_error(json_mode, str(exc))
        return 2
    except ValueError as exc:
        _report_error(json_mode, str(exc))
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
