"""
HyperBall - Solver Service

Unified entry point over every exact algorithm. Names an algorithm, runs it,
re-verifies any YES answer against the instance and packages the outcome as a
SolveReport.

`auto` dispatch order (stable):
    scp given        -> branch-scp
    icon ≤ 3         -> csp3
    d ≤ auto dim     -> brute
    otherwise        -> treewidth

Licensed under the MIT License.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from hyperball.core.config import settings
from hyperball.core.exceptions import VerificationError
from hyperball.schemas.report import SolveReport
from hyperball.services.branching import ConcisenessSearchTree, solve_icon_blue, solve_icon_red
from hyperball.services.csp import solve_icon3
from hyperball.services.geometry import Instance, Solution, first_violation
from hyperball.services.ilp import solve_ilp
from hyperball.services.oracle import brute_force_solve, solve_bounded_conciseness
from hyperball.services.realvalued import RealInstance, RealSolution, solve_real
from hyperball.services.treewidth import NiceTreeDecomposition, TreewidthSolver

logger = logging.getLogger(__name__)

ALGORITHMS = (
    "auto",
    "brute",
    "bounded",
    "ilp",
    "csp3",
    "branch-blue",
    "branch-red",
    "branch-scp",
    "treewidth",
    "real-lp",
)

# algorithms whose answer is a minimum-conciseness center, so a budget can be checked afterwards
_MIN_CONCISENESS = {"brute", "treewidth"}
_NEEDS_SCP = {"bounded", "branch-scp"}


@dataclass(frozen=True)
class SolveOptions:
    scp: Optional[int] = None
    deduplicate: bool = False
    presolve: bool = True
    ntd: Optional[NiceTreeDecomposition] = None


@dataclass(frozen=True)
class SolveOutcome:
    algo: str
    solution: Optional[Solution]
    time_ms: float
    width: Optional[int] = None
    nodes_expanded: Optional[int] = None
    scp: Optional[int] = None
    real: Optional[RealSolution] = None

    @property
    def status(self) -> str:
        return "yes" if self.solution is not None or self.real is not None else "no"

    def to_report(self) -> SolveReport:
        solution = self.solution
        return SolveReport(
            status=self.status,
            center=list(solution.center.support) if solution else None,
            radius=solution.radius if solution else None,
            conciseness=solution.conciseness if solution else None,
            algo=self.algo,
            time_ms=round(self.time_ms, 3),
            width=self.width,
            nodes_expanded=self.nodes_expanded,
            scp=self.scp,
            real_center=[str(x) for x in self.real.center] if self.real else None,
            radius_squared=str(self.real.radius_squared) if self.real else None,
        )


Extras = Dict[str, int]
Runner = Callable[[Instance, SolveOptions], Tuple[Optional[Solution], Extras]]


def _brute(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    optimal = brute_force_solve(inst)
    return (optimal.solution if optimal else None), {}


def _bounded(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    return solve_bounded_conciseness(inst, options.scp), {}


def _ilp(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    return solve_ilp(inst, presolve=options.presolve), {}


def _csp3(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    return solve_icon3(inst), {}


def _branch_blue(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    return solve_icon_blue(inst), {}


def _branch_red(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    return solve_icon_red(inst), {}


def _branch_scp(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    tree = ConcisenessSearchTree(inst, options.scp, deduplicate=options.deduplicate)
    solution = tree.solve()
    return solution, {"nodes_expanded": tree.nodes_expanded}


def _treewidth(inst: Instance, options: SolveOptions) -> Tuple[Optional[Solution], Extras]:
    solver = TreewidthSolver(inst, options.ntd)
    optimal = solver.solve()
    return (optimal.solution if optimal else None), {"width": solver.width}


RUNNERS: Dict[str, Runner] = {
    "brute": _brute,
    "bounded": _bounded,
    "ilp": _ilp,
    "csp3": _csp3,
    "branch-blue": _branch_blue,
    "branch-red": _branch_red,
    "branch-scp": _branch_scp,
    "treewidth": _treewidth,
}


def choose_algorithm(inst: Instance, scp: Optional[int] = None) -> str:
    """
    A budget is checked before icon: csp3 has no bounded variant, so an scp
    question on an icon ≤ 3 instance still goes to branch-scp.
    """
    if scp is not None:
        return "branch-scp"
    if inst.icon <= 3:
        return "csp3"
    if inst.dim <= settings.auto_brute_dim:
        return "brute"
    return "treewidth"


def _check_request(algo: str, scp: Optional[int]) -> None:
    if algo not in RUNNERS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
    if algo in _NEEDS_SCP and scp is None:
        raise ValueError(f"--algo {algo} requires --scp")
    if scp is not None and algo not in _NEEDS_SCP | _MIN_CONCISENESS:
        raise ValueError(f"--algo {algo} does not answer conciseness-bounded questions")
    if scp is not None and scp < 0:
        raise ValueError(f"conciseness budget must be non-negative, got {scp}")


def reverify(inst: Instance, solution: Optional[Solution], scp: Optional[int], algo: str) -> None:
    """Every YES is checked against the instance before anyone sees it."""
    if solution is None:
        return
    violation = first_violation(inst, solution.center, solution.radius)
    if violation is not None:
        color, vector = violation
        raise VerificationError(
            f"{algo} returned center {list(solution.center.support)} radius {solution.radius}, "
            f"which misplaces {color} vector {list(vector.support)}"
        )
    if scp is not None and solution.conciseness > scp:
        raise VerificationError(f"{algo} returned a center with {solution.conciseness} ones above scp={scp}")


def run_algorithm(inst: Instance, algo: str, options: Optional[SolveOptions] = None) -> SolveOutcome:
    options = options or SolveOptions()
    if algo == "real-lp":
        if options.scp is not None:
            raise ValueError("--algo real-lp does not answer conciseness-bounded questions")
        return run_real(RealInstance.from_binary(inst))
    if algo == "auto":
        algo = choose_algorithm(inst, options.scp)
        logger.info(f"🔍 auto picked {algo}")
    _check_request(algo, options.scp)

    started = time.perf_counter()
    solution, extras = RUNNERS[algo](inst, options)
    elapsed = (time.perf_counter() - started) * 1000.0

    if algo in _MIN_CONCISENESS and options.scp is not None and solution is not None:
        if solution.conciseness > options.scp:
            solution = None
    reverify(inst, solution, options.scp, algo)
    logger.info(f"✅ {algo}: {'yes' if solution else 'no'} in {elapsed:.1f} ms")
    return SolveOutcome(algo, solution, elapsed, scp=options.scp, **extras)


def run_real(inst: RealInstance, bounded_center: bool = True) -> SolveOutcome:
    started = time.perf_counter()
    solution = solve_real(inst, bounded_center=bounded_center)
    elapsed = (time.perf_counter() - started) * 1000.0
    logger.info(f"✅ real-lp: {'yes' if solution else 'no'} in {elapsed:.1f} ms")
    return SolveOutcome("real-lp", None, elapsed, real=solution)
