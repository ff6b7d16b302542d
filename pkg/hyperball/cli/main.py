#!/usr/bin/env python3
"""
HyperBall - Command Line Interface

    python -m hyperball.cli solve FILE [--algo A] [--scp K] ...
    python -m hyperball.cli verify FILE --center "1 2 3" --radius R
    python -m hyperball.cli gen {random,path,from-mr,from-hs,from-mcis,from-gamma4} ...
    python -m hyperball.cli bench MANIFEST
    python -m hyperball.cli td FILE

JSON, instance text and CSV go to stdout; diagnostics go to stderr.

Exit codes: 0 solved / VALID, 1 INVALID, 2 usage, 3 parse error,
4 solver refusal, 5 internal verification failure or bench mismatch.

Licensed under the MIT License.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from hyperball.cli.gen import add_gen_parser
from hyperball.core.config import settings
from hyperball.core.exceptions import (
    BenchMismatchError,
    InstanceError,
    InvalidDecompositionError,
    SolverLimitError,
    VerificationError,
)
from hyperball.services.benchmark import run_bench, write_bench_csv
from hyperball.services.csp import case_formulas, to_dimacs
from hyperball.services.geometry import BitVector, Instance, first_violation, hamming, is_degenerate, load_instance
from hyperball.services.ilp import build_ilp, dump_ilp
from hyperball.services.realvalued import RealInstance, load_real_instance
from hyperball.services.solver_service import ALGORITHMS, SolveOptions, run_algorithm, run_real
from hyperball.services.treewidth import (
    NiceTreeDecomposition,
    build_incidence_graph,
    load_pace_td,
    min_fill_decomposition,
    nicify,
    write_pace_td,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_REFUSED = 4
EXIT_INTERNAL = 5


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _write_text(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    _err(f"💾 wrote {out}")


def _load_td(path: Path, inst: Instance) -> NiceTreeDecomposition:
    num_vertices, bag_tree = load_pace_td(path)
    expected = build_incidence_graph(inst).graph.number_of_nodes()
    if num_vertices != expected:
        raise InvalidDecompositionError(
            f"{path} covers {num_vertices} vertices, the incidence graph has {expected}"
        )
    return nicify(bag_tree)


def _write_dumps(args: argparse.Namespace, inst: Instance) -> None:
    if args.dump_ilp:
        if is_degenerate(inst):
            logger.warning("⚠️ instance has an empty color; no ILP to dump")
        else:
            _write_text(dump_ilp(build_ilp(inst)), args.dump_ilp)
    if args.dump_2sat:
        parts = []
        for case, formula in case_formulas(inst):
            parts.append(f"c case {case.value}\n{to_dimacs(formula)}")
        _write_text("".join(parts), args.dump_2sat)


def cmd_solve(args: argparse.Namespace) -> int:
    if args.real:
        if args.algo not in ("auto", "real-lp"):
            raise ValueError("--real instances are solved with --algo real-lp")
        if args.scp is not None:
            raise ValueError("--algo real-lp does not answer conciseness-bounded questions")
        outcome = run_real(load_real_instance(args.file), bounded_center=not args.no_box)
    else:
        inst = load_instance(args.file)
        if args.algo == "real-lp":
            if args.scp is not None:
                raise ValueError("--algo real-lp does not answer conciseness-bounded questions")
            outcome = run_real(RealInstance.from_binary(inst), bounded_center=not args.no_box)
        else:
            _write_dumps(args, inst)
            options = SolveOptions(
                scp=args.scp,
                deduplicate=args.dedupe,
                presolve=not args.no_presolve,
                ntd=_load_td(args.td_file, inst) if args.td_file else None,
            )
            outcome = run_algorithm(inst, args.algo, options)

    print(outcome.to_report().model_dump_json(exclude_none=True))
    return EXIT_OK


def _parse_center(text: str, dim: int) -> BitVector:
    try:
        coordinates = [int(token) for token in text.split()]
    except ValueError as e:
        raise ValueError(f"--center takes space-separated coordinates, got {text!r}") from e
    for coordinate in coordinates:
        if coordinate < 1 or coordinate > dim:
            raise ValueError(f"center coordinate {coordinate} outside [1, {dim}]")
    return BitVector.from_coordinates(dim, coordinates)


def cmd_verify(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    center = _parse_center(args.center, inst.dim)
    violation = first_violation(inst, center, args.radius)
    if violation is None:
        print("VALID")
        return EXIT_OK
    color, vector = violation
    print(f"INVALID {color} {list(vector.support)} at distance {hamming(vector, center)}")
    return EXIT_INVALID


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(args.manifest, workers=args.workers, isolate=False if args.no_isolate else None)
    write_bench_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_td(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    graph = build_incidence_graph(inst).graph
    bag_tree = min_fill_decomposition(graph)
    _write_text(write_pace_td(bag_tree, graph.number_of_nodes()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperball", description="Exact binary hypersphere classification")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Decide an instance and print a JSON report")
    solve.add_argument("file", type=Path)
    solve.add_argument("--algo", choices=ALGORITHMS, default="auto")
    solve.add_argument("--scp", type=int, default=None, help="Bound on the number of ones of the center")
    solve.add_argument("--real", action="store_true", help="FILE is a real-valued instance (coordinate:value)")
    solve.add_argument("--no-box", action="store_true", help="real-lp: do not restrict the center to [0,1]^d")
    solve.add_argument("--dedupe", action="store_true", help="branch-scp: skip supports already expanded")
    solve.add_argument("--no-presolve", action="store_true", help="ilp: disable dual fixing")
    solve.add_argument("--dump-ilp", type=Path, default=None, help="Write the column-type ILP to this path")
    solve.add_argument("--dump-2sat", type=Path, default=None, help="Write the case formulas as DIMACS")
    solve.add_argument("--td-file", type=Path, default=None, help="treewidth: use this PACE decomposition")
    solve.set_defaults(handler=cmd_solve)

    verify = commands.add_parser("verify", help="Check a center and radius against an instance")
    verify.add_argument("file", type=Path)
    verify.add_argument("--center", required=True, help='Support of the center, e.g. "1 2 3"')
    verify.add_argument("--radius", type=int, required=True)
    verify.set_defaults(handler=cmd_verify)

    add_gen_parser(commands)

    bench = commands.add_parser("bench", help="Run a benchmark manifest and print CSV")
    bench.add_argument("manifest", type=Path)
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--no-isolate", action="store_true", help="Run solver calls in-process")
    bench.set_defaults(handler=cmd_bench)

    td = commands.add_parser("td", help="Write a heuristic tree decomposition of the incidence graph (PACE)")
    td.add_argument("file", type=Path)
    td.add_argument("--out", type=Path, default=None)
    td.set_defaults(handler=cmd_td)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args)
    except (InstanceError, InvalidDecompositionError) as e:
        _err(f"❌ input error: {e}")
        return EXIT_PARSE
    except SolverLimitError as e:
        _err(f"⚠️ refused: {e}")
        return EXIT_REFUSED
    except (VerificationError, BenchMismatchError) as e:
        _err(f"❌ internal check failed: {e}")
        return EXIT_INTERNAL
    except ValueError as e:
        _err(f"❌ usage: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
