"""
HyperBall - Hardness Constructions as Generators

Each source problem maps to a separation instance with the same answer, so the
constructions double as known-answer instance generators. Coordinate layouts
are fixed: variables/elements/vertices come first, then dummy and gadget
coordinates in construction order.

Licensed under the MIT License.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from hyperball.core.exceptions import InstanceError
from hyperball.services.geometry import BitVector, Instance, Solution
from hyperball.services.generators.sources import (
    Gamma4Instance,
    HittingSetInstance,
    MCISInstance,
    MRInstance,
    rest_mr_variants,
)

logger = logging.getLogger(__name__)

GAMMA4_GADGET_COORDINATES = 8 + 56 + 16


def _extend(vector: BitVector, tail: Tuple[int, int]) -> BitVector:
    dim = vector.dim + 2
    extra = [vector.dim + i + 1 for i, bit in enumerate(tail) if bit]
    return BitVector(dim, vector.support + tuple(extra))


def reduce_mr_to_2red(mr: MRInstance) -> Instance:
    """
    Minimum Radius with a zero vector and centers of exactly n ones, as a
    separation instance with two reds.

    The all-ones vector joins V, every vector of V gets the tail (0, 1) and the
    reds are the all-zero and all-ones vectors of dimension 2n + 2.
    """
    dim = mr.dim + 2
    ones = BitVector.ones(mr.dim)
    blues = [_extend(v, (0, 1)) for v in mr.vectors]
    if ones not in mr.vectors:
        blues.append(_extend(ones, (0, 1)))
    reds = [BitVector.zeros(dim), BitVector.ones(dim)]
    return Instance.build(dim, reds=reds, blues=blues)


def reduce_mr_to_2blue(mr: MRInstance) -> Instance:
    red_side = reduce_mr_to_2red(mr)
    return Instance(red_side.dim, reds=red_side.blues, blues=red_side.reds)


def mr_center_from_2red(mr: MRInstance, solution: Solution) -> BitVector:
    """The first 2n coordinates of a separating center."""
    return BitVector(mr.dim, tuple(c for c in solution.center.support if c <= mr.dim))


def solve_mr_via_2red(mr: MRInstance, solve: Callable[[Instance], Optional[Solution]]) -> bool:
    """MR through one 2Red instance per shifted copy of V; YES iff any of them separates."""
    for variant in rest_mr_variants(mr):
        if solve(reduce_mr_to_2red(variant)) is not None:
            return True
    return False


def reduce_gamma4(csp: Gamma4Instance) -> Instance:
    """
    Γ4 satisfiability as separation with data conciseness 4.

    Constraint vectors sit on the variable coordinates of their scope (blue
    for "at least three ones", red for "at most two"). The first gadget forces
    a center to share two ones with some red, the second forces it to miss a
    one of some blue, which together pin the radius so that separation reads
    as the two relations.
    """
    index: Dict[str, int] = {v: i + 1 for i, v in enumerate(csp.variables)}
    for constraint in csp.constraints:
        if len(constraint.scope) != 4:
            raise InstanceError(f"Γ4 constraints have arity 4, got scope {constraint.scope}")
        if len(set(constraint.scope)) != 4:
            raise InstanceError(f"repeated variable in scope {constraint.scope}")
    red_scopes = {frozenset(c.scope) for c in csp.red_constraints}
    clash = next((c.scope for c in csp.blue_constraints if frozenset(c.scope) in red_scopes), None)
    if clash is not None:
        raise InstanceError(f"scope {clash} carries both relations; such an instance is unsatisfiable")

    n = len(csp.variables)
    dim = n + GAMMA4_GADGET_COORDINATES
    blues: List[BitVector] = []
    reds: List[BitVector] = []

    def on(coordinates) -> BitVector:
        return BitVector.from_coordinates(dim, coordinates)

    for constraint in csp.constraints:
        vector = on(index[v] for v in constraint.scope)
        (blues if constraint.relation == "B" else reds).append(vector)

    gadget = list(range(n + 1, n + 9))
    blues.append(on(gadget[:4]))
    blues.append(on(gadget[4:]))
    fresh = n + 9
    for i, j in combinations(range(8), 2):
        reds.append(on((gadget[i], gadget[j], fresh, fresh + 1)))
        fresh += 2

    firsts = []
    for _ in range(4):
        block = list(range(fresh, fresh + 4))
        blues.append(on(block))
        firsts.append(block[0])
        fresh += 4
    reds.append(on(firsts))

    logger.debug(f"📊 Γ4 instance: {n} variables, d={dim}, {len(blues)} blues, {len(reds)} reds")
    return Instance.build(dim, reds=reds, blues=blues)


def reduce_hittingset(hs: HittingSetInstance) -> Tuple[Instance, int]:
    """
    Hitting Set as separation under conciseness bound k.

    Element coordinates come first, then ℓ dummy coordinates. Each set is a
    blue on its elements and one red covers the dummies. An empty family has
    no red, so every center separates.
    """
    ell = hs.set_size
    if hs.family and ell == 0:
        raise InstanceError("the empty set cannot be hit")
    index = {u: i + 1 for i, u in enumerate(hs.universe)}
    dim = max(len(hs.universe) + ell, 1)
    blues = [BitVector.from_coordinates(dim, (index[u] for u in s)) for s in hs.family]
    reds = []
    if hs.family:
        reds.append(BitVector.from_coordinates(dim, range(len(hs.universe) + 1, len(hs.universe) + ell + 1)))
    return Instance.build(dim, reds=reds, blues=blues), hs.k


def reduce_mcis(g: MCISInstance) -> Tuple[Instance, int]:
    """
    Multicolored Independent Set as separation under conciseness bound k.

    Vertex coordinates come first, then nk − 2k + 1 dummies. Every edge,
    clique edges inside a part included, is a red on its endpoints and all
    dummies; one more red covers the dummies alone and a single blue covers
    every vertex coordinate.
    """
    n, k = g.n, g.k
    dummies = n * k - 2 * k + 1
    if dummies < 0:
        raise InstanceError(f"n={n}, k={k} leaves a negative number of dummy coordinates")
    vertices = g.vertices
    index = {v: i + 1 for i, v in enumerate(vertices)}
    dim = max(n * k + dummies, 1)
    dummy_coordinates = list(range(n * k + 1, n * k + dummies + 1))

    reds = []
    for u, v in combinations(vertices, 2):
        if g.adjacent(u, v):
            reds.append(BitVector.from_coordinates(dim, [index[u], index[v], *dummy_coordinates]))
    reds.append(BitVector.from_coordinates(dim, dummy_coordinates))
    blues = [BitVector.from_coordinates(dim, index.values())]
    return Instance.build(dim, reds=reds, blues=blues), k
