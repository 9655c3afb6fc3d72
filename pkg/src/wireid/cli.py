"""Command line front end: construct, bounds, verify, simulate.

Exit statuses are stable: 0 success, 1 infeasible input, 2 verification
failure, 3 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .cable import make_cable, run_protocol, transcript_to_json
from .matrices import format_degree_sequence
from .partitions import (
    PARTITION_SCHEMA,
    InfeasibleOrderError,
    construct_trace,
    kg_violations,
    max_elements,
    min_elements,
    partition_from_json,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INVALID = 2
EXIT_USAGE = 3

CONSTRUCTION_SCHEMA = "kg-construction/1"
BOUNDS_SCHEMA = "kg-bounds/1"

GRID, STRUCTURED = "grid", "structured"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # verification failures here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wireid", description="Knowlton-Graham partitions and cable wire identification")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = sub.add_parser("construct", help="build a partition pair for n elements")
    construct.add_argument("--n", type=int, required=True, help="number of elements")
    construct.add_argument("--m", type=int, default=None, help="order (smallest feasible if omitted)")
    construct.add_argument("--format", choices=(GRID, STRUCTURED), default=GRID)
    construct.set_defaults(func=cmd_construct)

    bounds = sub.add_parser("bounds", help="feasible n range per order")
    bounds.add_argument("--max-m", type=int, required=True, help="largest order to tabulate")
    bounds.add_argument("--format", choices=(GRID, STRUCTURED), default=GRID)
    bounds.set_defaults(func=cmd_bounds)

    verify = sub.add_parser("verify", help="check a serialized partition pair")
    verify.add_argument("path", help="partition document, or - for stdin")
    verify.set_defaults(func=cmd_verify)

    simulate = sub.add_parser("simulate", help="run the two-ended identification protocol")
    simulate.add_argument("--n", type=int, required=True, help="number of wires")
    simulate.add_argument("--m", type=int, default=None, help="order (smallest feasible if omitted)")
    simulate.add_argument("--seed", type=int, default=0, help="hidden wiring seed (0 = identity)")
    simulate.add_argument("--format", choices=(GRID, STRUCTURED), default=GRID)
    simulate.set_defaults(func=cmd_simulate)

    return parser


def _fmt_sets(sets: Iterable[frozenset]) -> str:
    return " ".join("{" + ",".join(str(x) for x in sorted(s)) + "}" for s in sets)


def cmd_construct(args) -> int:
    trace = construct_trace(args.n, args.m)
    rep, partition = trace.representation, trace.partition
    if args.format == STRUCTURED:
        payload = {
            "schema": CONSTRUCTION_SCHEMA,
            "n": partition.n,
            "m": rep.m,
            "t": list(rep.t),
            "s": rep.s,
            "k": rep.k,
            "matrix": trace.matrix.to_text().splitlines(),
            "a_sets": [sorted(s) for s in partition.a_sets],
            "b_sets": [sorted(s) for s in partition.b_sets],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"n={partition.n} m={rep.m}")
        print(f"t={format_degree_sequence(rep.t)}")
        print(f"s={rep.s} k={rep.k}")
        print("matrix:")
        sys.stdout.write(trace.matrix.to_text())
        print(f"a_sets: {_fmt_sets(partition.a_sets)}")
        print(f"b_sets: {_fmt_sets(partition.b_sets)}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.max_m < 1:
        print("error: --max-m must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    rows = [(m, min_elements(m), max_elements(m)) for m in range(1, args.max_m + 1)]
    if args.format == STRUCTURED:
        payload = {
            "schema": BOUNDS_SCHEMA,
            "rows": [{"m": m, "min_n": lo, "max_n": hi} for m, lo, hi in rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        for m, lo, hi in rows:
            print(f"{m} {lo} {hi}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path, encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        partition = partition_from_json(text, schemas=(PARTITION_SCHEMA, CONSTRUCTION_SCHEMA))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    problems = kg_violations(partition)
    if problems:
        for line in problems:
            print(line, file=sys.stderr)
        return EXIT_INVALID
    print(f"valid Knowlton-Graham pair: n={partition.n} order={partition.order}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    trace = construct_trace(args.n, args.m)
    cable = make_cable(args.n, args.seed)
    transcript = run_protocol(trace.partition, cable)
    if args.format == STRUCTURED:
        sys.stdout.write(transcript_to_json(transcript))
    else:
        print(f"n={args.n} m={trace.representation.m} seed={args.seed}")
        print(f"phase1_plan: {_fmt_sets(transcript.phase1_plan.groups)}")
        print(f"phase1_probe: {format_degree_sequence(transcript.phase1_probe)}")
        print(f"phase2_plan: {_fmt_sets(transcript.phase2_plan.groups)}")
        print(f"phase2_probe: {format_degree_sequence(transcript.phase2_probe)}")
        print("coords_a: " + " ".join(f"({j},{k})" for j, k in transcript.coords_a))
        print("coords_b: " + " ".join(f"({j},{k})" for j, k in transcript.coords_b))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:  # nonpositive sizes and the like
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
