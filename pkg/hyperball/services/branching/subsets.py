"""
HyperBall - Subset Branching

Some solution (if any) has its support inside the union of the blue supports;
symmetrically, some solution is 1 on every coordinate outside the union of the
red supports. Enumerating the subsets of the respective union is therefore
exhaustive, and cheap whenever that union is small.

Licensed under the MIT License.
"""

import logging
from itertools import combinations
from typing import Iterable, Optional, Tuple

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


def _union(vectors: Iterable[BitVector]) -> Tuple[int, ...]:
    return tuple(sorted({i for v in vectors for i in v.support}))


def _search(
    inst: Instance,
    pool: Tuple[int, ...],
    fixed: Tuple[int, ...],
    limit: Optional[int],
    label: str,
) -> Optional[Solution]:
    limit = settings.branch_limit if limit is None else limit
    if len(pool) > limit:
        raise SolverLimitError(f"{label} refuses a branching set of {len(pool)} coordinates (limit {limit})")
    if is_degenerate(inst):
        return degenerate_solution(inst)

    logger.info(f"🔍 {label}: 2^{len(pool)} subsets")
    for size in range(len(pool) + 1):
        for chosen in combinations(pool, size):
            center = BitVector.from_coordinates(inst.dim, fixed + chosen)
            radius = canonical_radius(inst, center)
            if radius is not None:
                return Solution(center, radius)
    return None


def solve_icon_blue(inst: Instance, limit: Optional[int] = None) -> Optional[Solution]:
    """Candidates are the indicators of B' ⊆ ∪O(blue), by size then lexicographically."""
    return _search(inst, _union(inst.blues), (), limit, "branch-blue")


def solve_icon_red(inst: Instance, limit: Optional[int] = None) -> Optional[Solution]:
    """Candidates are ([d] \\ R) ∪ R' for R' ⊆ R = ∪O(red)."""
    red_union = _union(inst.reds)
    taken = set(red_union)
    outside = tuple(i for i in range(1, inst.dim + 1) if i not in taken)
    return _search(inst, red_union, outside, limit, "branch-red")

