"""
HyperBall - Exhaustive Reference Solvers

Centers are enumerated by ascending conciseness and lexicographically within a
conciseness level. The first level holding a valid center decides the optimum
conciseness; inside it the smallest canonical radius wins (first center in
order on ties). These solvers are the ground truth the rest of the package is
tested against, so they stay free of pruning.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from hyperball.core.config import settings
from hyperball.core.exceptions import SolverLimitError
from hyperball.services.geometry import (
    BitVector,
    Instance,
    Solution,
    canonical_radius,
    degenerate_solution,
    is_degenerate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimalSolution:
    """Minimum-conciseness center, minimum radius among those."""

    solution: Solution

    @property
    def conciseness(self) -> int:
        return self.solution.conciseness

    @property
    def center(self) -> BitVector:
        return self.solution.center

    @property
    def radius(self) -> int:
        return self.solution.radius


def _best_in_level(inst: Instance, size: int) -> Optional[Solution]:
    best: Optional[Solution] = None
    for support in combinations(range(1, inst.dim + 1), size):
        center = BitVector(inst.dim, support)
        radius = canonical_radius(inst, center)
        if radius is None:
            continue
        if best is None or radius < best.radius:
            best = Solution(center, radius)
            if radius == 0:
                break
    return best


def _scan_levels(inst: Instance, top: int) -> Optional[Solution]:
    if is_degenerate(inst):
        solution = degenerate_solution(inst)
        if solution is None or solution.conciseness > top:
            return None
        return solution

    for size in range(top + 1):
        best = _best_in_level(inst, size)
        if best is not None:
            logger.debug(f"✅ Found center at conciseness {size} with radius {best.radius}")
            return best
    return None


def brute_force_solve(inst: Instance, limit: Optional[int] = None) -> Optional[OptimalSolution]:
    """Enumerate all 2^d centers; refuse when d exceeds the configured limit."""
    limit = settings.brute_limit if limit is None else limit
    if inst.dim > limit:
        raise SolverLimitError(f"brute force refuses d={inst.dim} (limit {limit}, see BHC_BRUTE_LIMIT)")

    logger.info(f"🔍 Brute force over 2^{inst.dim} centers")
    solution = _scan_levels(inst, inst.dim)
    return OptimalSolution(solution) if solution is not None else None


def solve_bounded_conciseness(inst: Instance, scp: int) -> Optional[Solution]:
    """Search only centers with at most scp ones (an scp above d is clamped to d)."""
    if scp < 0:
        raise ValueError(f"conciseness budget must be non-negative, got {scp}")
    return _scan_levels(inst, min(scp, inst.dim))
