"""
HyperBall - Instance Generation Commands

`gen random` and `gen path` draw seeded instances; the `from-*` commands run a
hardness construction on a source-problem file. Instance text goes to stdout
(or --out); the scp sidecar and the known answer, when the source is small
enough for its exhaustive solver, go to stderr and next to --out.

Licensed under the MIT License.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional

from hyperball.core.exceptions import InstanceError
from hyperball.services.generators import (
    gen_path_instance,
    gen_random,
    parse_gamma4,
    parse_hitting_set,
    parse_mcis,
    parse_mr,
    read_source,
    reduce_gamma4,
    reduce_hittingset,
    reduce_mcis,
    reduce_mr_to_2blue,
    reduce_mr_to_2red,
    solve_gamma4_bf,
    solve_hittingset_bf,
    solve_mcis_bf,
    solve_rest_mr_bf,
)
from hyperball.services.geometry import BitVector, Instance, write_instance


def _emit(inst: Instance, out: Optional[Path], scp: Optional[int] = None, known=None) -> None:
    text = write_instance(inst)
    sidecar = []
    if scp is not None:
        sidecar.append(f"scp={scp}")
    if known is not None:
        sidecar.append(f"known={'yes' if known else 'no'}")

    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        if sidecar:
            out.with_name(out.name + ".meta").write_text("\n".join(sidecar) + "\n", encoding="utf-8")
    for line in sidecar:
        print(line, file=sys.stderr)


def _known(oracle, source) -> Optional[bool]:
    """Source answer from the exhaustive solver, or None when the source is too large for it."""
    try:
        return oracle(source)
    except InstanceError:
        print("⚠️ source too large for its exhaustive solver; no known answer", file=sys.stderr)
        return None


def cmd_gen_random(args: argparse.Namespace) -> int:
    _emit(gen_random(args.d, args.nr, args.nb, args.icon, args.seed), args.out)
    return 0


def cmd_gen_path(args: argparse.Namespace) -> int:
    _emit(gen_path_instance(args.d, args.nr, args.nb, args.window, args.seed), args.out)
    return 0


def cmd_gen_from_mr(args: argparse.Namespace) -> int:
    mr = read_source(args.source, parse_mr)
    inst = reduce_mr_to_2blue(mr) if args.two_blue else reduce_mr_to_2red(mr)
    known = None
    if BitVector.zeros(mr.dim) in mr.vectors:
        known = _known(solve_rest_mr_bf, mr)
    else:
        print("⚠️ V lacks the all-zero vector; the answer is not tied to the source", file=sys.stderr)
    _emit(inst, args.out, known=known)
    return 0


def cmd_gen_from_hs(args: argparse.Namespace) -> int:
    hs = read_source(args.source, parse_hitting_set)
    inst, scp = reduce_hittingset(hs)
    _emit(inst, args.out, scp=scp, known=_known(solve_hittingset_bf, hs))
    return 0


def cmd_gen_from_mcis(args: argparse.Namespace) -> int:
    g = read_source(args.source, parse_mcis)
    inst, scp = reduce_mcis(g)
    _emit(inst, args.out, scp=scp, known=_known(solve_mcis_bf, g))
    return 0


def cmd_gen_from_gamma4(args: argparse.Namespace) -> int:
    csp = read_source(args.source, parse_gamma4)
    _emit(reduce_gamma4(csp), args.out, known=_known(solve_gamma4_bf, csp))
    return 0


def add_gen_parser(commands) -> None:
    gen = commands.add_parser("gen", help="Generate instances")
    kinds = gen.add_subparsers(dest="kind", required=True)

    random_parser = kinds.add_parser("random", help="Seeded random instance")
    random_parser.add_argument("--d", type=int, required=True)
    random_parser.add_argument("--nr", type=int, required=True)
    random_parser.add_argument("--nb", type=int, required=True)
    random_parser.add_argument("--icon", type=int, required=True)
    random_parser.add_argument("--seed", type=int, default=0)
    random_parser.add_argument("--out", type=Path, default=None)
    random_parser.set_defaults(handler=cmd_gen_random)

    path_parser = kinds.add_parser("path", help="Seeded instance with windowed supports (small treewidth)")
    path_parser.add_argument("--d", type=int, required=True)
    path_parser.add_argument("--nr", type=int, required=True)
    path_parser.add_argument("--nb", type=int, required=True)
    path_parser.add_argument("--window", type=int, default=3)
    path_parser.add_argument("--seed", type=int, default=0)
    path_parser.add_argument("--out", type=Path, default=None)
    path_parser.set_defaults(handler=cmd_gen_path)

    mr_parser = kinds.add_parser("from-mr", help="Minimum Radius instance to 2Red / 2Blue")
    mr_parser.add_argument("source", type=Path)
    side = mr_parser.add_mutually_exclusive_group(required=True)
    side.add_argument("--2red", dest="two_red", action="store_true")
    side.add_argument("--2blue", dest="two_blue", action="store_true")
    mr_parser.add_argument("--out", type=Path, default=None)
    mr_parser.set_defaults(handler=cmd_gen_from_mr)

    for name, handler, help_text in (
        ("from-hs", cmd_gen_from_hs, "Hitting Set instance (prints scp)"),
        ("from-mcis", cmd_gen_from_mcis, "Multicolored Independent Set instance (prints scp)"),
        ("from-gamma4", cmd_gen_from_gamma4, "Γ4 CSP instance (data conciseness 4)"),
    ):
        source_parser = kinds.add_parser(name, help=help_text)
        source_parser.add_argument("source", type=Path)
        source_parser.add_argument("--out", type=Path, default=None)
        source_parser.set_defaults(handler=handler)
