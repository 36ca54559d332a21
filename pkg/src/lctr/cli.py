"""Command-line front door: evaluate, analyze, verify, benchmark, serve.

All computation happens in-process through the library; ``serve`` hands
off to uvicorn with the HTTP app.  Exit codes: 0 success, 1 verification
mismatch, 2 parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import bench as bench_mod
from .engine import (
    Outcome,
    best_move,
    count_plays,
    follower_values,
    outcome,
    reachable_positions,
    sg_grid,
    sg_memo,
    sg_naive,
)
from .families import DEFAULT_VERIFY_BOUNDS, FAMILY_KINDS, verify_family_range
from .partitions import MoveKind, Partition, format_partition, parse_partition

EVALUATORS = {"grid": sg_grid, "memo": sg_memo, "naive": sg_naive}


def _port(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 65535:
        raise argparse.ArgumentTypeError("port must be in [1, 65535]")
    return value


def _positive_int_list(text: str) -> list[int]:
    values = [int(item) for item in text.split(",") if item.strip()]
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctr",
        description="Grundy values, optimal play, verification and benchmarks "
        "for the left-column/top-row game on integer partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    p_eval = sub.add_parser("eval", help="Grundy value of a position")
    p_eval.add_argument("partition")
    p_eval.add_argument("--engine", choices=sorted(EVALUATORS), default="grid")
    add_format(p_eval)

    p_outcome = sub.add_parser("outcome", help="N or P classification")
    p_outcome.add_argument("partition")
    add_format(p_outcome)

    p_best = sub.add_parser("best-move", help="optimal move and resulting position")
    p_best.add_argument("partition")
    add_format(p_best)

    p_followers = sub.add_parser("followers", help="both followers with their values")
    p_followers.add_argument("partition")
    add_format(p_followers)

    p_reach = sub.add_parser("reachable", help="positions reachable by one or more moves")
    p_reach.add_argument("partition")
    group = p_reach.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print the count (default)")
    group.add_argument("--list", action="store_true", help="print every position")
    add_format(p_reach)

    p_plays = sub.add_parser("plays", help="number of distinct labeled plays")
    p_plays.add_argument("partition")
    add_format(p_plays)

    p_verify = sub.add_parser(
        "verify", help="check closed-form family values against the grid evaluator"
    )
    p_verify.add_argument(
        "--family", choices=FAMILY_KINDS + ("all",), default="all"
    )
    p_verify.add_argument(
        "--bound",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a default bound, e.g. --bound max_width=10",
    )
    add_format(p_verify)

    p_bench = sub.add_parser("bench", help="wall-clock timings per engine and size")
    p_bench.add_argument("--sizes", type=_positive_int_list, default=[10**4, 10**5, 10**6])
    p_bench.add_argument("--shape", choices=bench_mod.SHAPES, default="staircase")
    p_bench.add_argument(
        "--engines",
        default="grid,memo",
        help="comma-separated subset of grid,memo,naive",
    )
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument(
        "--parts", type=int, default=None, help="part count for random shapes"
    )
    add_format(p_bench)

    p_serve = sub.add_parser("serve", help="start the HTTP play service")
    p_serve.add_argument("--port", type=_port, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--log",
        default=None,
        help="append-only JSON-lines move log (default: $LCTR_LOG if set)",
    )

    return parser


def _emit(args: argparse.Namespace, payload: dict, plain: str) -> None:
    if getattr(args, "format", "plain") == "json":
        print(json.dumps(payload))
    else:
        print(plain)


def _cmd_eval(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    value = EVALUATORS[args.engine](p)
    _emit(
        args,
        {"partition": list(p.parts), "engine": args.engine, "sg": value},
        str(value),
    )
    return 0


def _cmd_outcome(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    label = outcome(p).value
    _emit(args, {"partition": list(p.parts), "outcome": label}, label)
    return 0


def _cmd_best_move(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    move, resulting = best_move(p)
    _emit(
        args,
        {
            "partition": list(p.parts),
            "move": move.value,
            "resulting": list(resulting.parts),
        },
        f"{move.value} {format_partition(resulting)}",
    )
    return 0


def _cmd_followers(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    values = follower_values(p)
    lines = []
    payload = {"partition": list(p.parts), "followers": {}}
    for kind in (MoveKind.LEFT_COLUMN, MoveKind.TOP_ROW):
        follower, sg = values[kind]
        lines.append(f"{kind.value} {format_partition(follower)} {sg}")
        payload["followers"][kind.value] = {
            "partition": list(follower.parts),
            "sg": sg,
        }
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_reachable(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    positions = reachable_positions(p)
    if args.list:
        ordered = sorted(positions, key=lambda q: (q.size, q.parts))
        _emit(
            args,
            {
                "partition": list(p.parts),
                "count": len(positions),
                "positions": [list(q.parts) for q in ordered],
            },
            "\n".join(format_partition(q) for q in ordered),
        )
    else:
        _emit(
            args,
            {"partition": list(p.parts), "count": len(positions)},
            str(len(positions)),
        )
    return 0


def _cmd_plays(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    n = count_plays(p)
    _emit(args, {"partition": list(p.parts), "plays": n}, str(n))
    return 0


def _parse_bounds(pairs: list[str]) -> dict[str, int]:
    bounds = {}
    for pair in pairs:
        name, _, value = pair.partition("=")
        if not name or not value:
            raise ValueError(f"bad bound {pair!r}, expected NAME=VALUE")
        bounds[name.strip()] = int(value)
    return bounds


def _cmd_verify(args: argparse.Namespace) -> int:
    overrides = _parse_bounds(args.bound)
    kinds = FAMILY_KINDS if args.family == "all" else (args.family,)
    reports = []
    for kind in kinds:
        known = {k: v for k, v in overrides.items() if k in DEFAULT_VERIFY_BOUNDS[kind]}
        reports.append(verify_family_range(kind, known or None))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "reports": [
                        {
                            "family": r.family,
                            "total": r.total,
                            "passed": r.passed,
                            "failed": r.failed,
                            "mismatches": r.mismatches,
                        }
                        for r in reports
                    ]
                },
                default=str,
            )
        )
    else:
        for r in reports:
            print(f"family={r.family} total={r.total} passed={r.passed} failed={r.failed}")
            for miss in r.mismatches:
                print(
                    f"  MISMATCH {miss['params']} closed_form={miss['closed_form']} "
                    f"grid={miss['grid']}"
                )
    return 0 if all(r.ok for r in reports) else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    rows = bench_mod.run_bench(
        args.sizes, args.shape, engines, seed=args.seed, parts=args.parts
    )
    if args.format == "json":
        print(json.dumps({"rows": rows}))
    else:
        print("engine,shape,size,millis")
        for row in rows:
            print(f"{row['engine']},{row['shape']},{row['size']},{row['millis']}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    log_path = args.log or os.environ.get("LCTR_LOG") or None
    app = create_app(log_path=log_path)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "outcome": _cmd_outcome,
    "best-move": _cmd_best_move,
    "followers": _cmd_followers,
    "reachable": _cmd_reachable,
    "plays": _cmd_plays,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
