"""
HyperBall - Conciseness-Bounded Search Tree

Starts from the all-zero center. While some red r is not strictly farther than
some blue b, any solution above the current center must add a coordinate of
O(b) \\ (O(r) ∪ O(c)); the tree branches on each. Depth is bounded by the
conciseness budget and the branching factor by icon, so at most
Σ_{j ≤ scp} icon^j nodes are expanded.

Licensed under the MIT License.
"""

import logging
from typing import Optional, Set, Tuple

from hyperball.services.geometry import (
    BitVector,
    Instance,
    Solution,
    canonical_radius,
    degenerate_solution,
    hamming,
    is_degenerate,
)

logger = logging.getLogger(__name__)


class ConcisenessSearchTree:
    """Depth-first search tree; `nodes_expanded` counts visited centers."""

    def __init__(self, inst: Instance, scp: int, deduplicate: bool = False):
        if scp < 0:
            raise ValueError(f"conciseness budget must be non-negative, got {scp}")
        self.inst = inst
        self.scp = min(scp, inst.dim)
        self.deduplicate = deduplicate
        self.nodes_expanded = 0
        self._visited: Set[Tuple[int, ...]] = set()

    def node_bound(self) -> int:
        icon = self.inst.icon
        return sum(icon ** j for j in range(self.scp + 1))

    def _violated_pair(self, center: BitVector) -> Optional[Tuple[BitVector, BitVector]]:
        blue_distances = [hamming(b, center) for b in self.inst.blues]
        for red in self.inst.reds:
            red_distance = hamming(red, center)
            for blue, blue_distance in zip(self.inst.blues, blue_distances):
                if red_distance <= blue_distance:
                    return red, blue
        return None

    def _expand(self, support: Tuple[int, ...]) -> Optional[Solution]:
        if self.deduplicate:
            if support in self._visited:
                return None
            self._visited.add(support)
        self.nodes_expanded += 1

        center = BitVector(self.inst.dim, support)
        pair = self._violated_pair(center)
        if pair is None:
            radius = canonical_radius(self.inst, center)
            return Solution(center, radius) if radius is not None else None
        if len(support) >= self.scp:
            return None

        red, blue = pair
        blocked = set(red.support) | set(support)
        for coordinate in blue.support:
            if coordinate in blocked:
                continue
            found = self._expand(tuple(sorted(support + (coordinate,))))
            if found is not None:
                return found
        return None

    def solve(self) -> Optional[Solution]:
        if is_degenerate(self.inst):
            solution = degenerate_solution(self.inst)
            if solution is None or solution.conciseness > self.scp:
                return None
            return solution
        solution = self._expand(())
        logger.debug(f"📊 search tree expanded {self.nodes_expanded} nodes (bound {self.node_bound()})")
        return solution


def solve_scp_icon(inst: Instance, scp: int, deduplicate: bool = False) -> Optional[Solution]:
    return ConcisenessSearchTree(inst, scp, deduplicate=deduplicate).solve()
