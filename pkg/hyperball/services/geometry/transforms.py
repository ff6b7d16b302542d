"""
HyperBall - Metamorphic Transforms

Answer-preserving rewrites of an instance (XOR mask, color swap, coordinate
permutation) together with the maps that carry a witness across each rewrite.

Licensed under the MIT License.
"""

from typing import Sequence

from hyperball.core.exceptions import DimensionMismatchError
from hyperball.services.geometry.vectors import BitVector, Instance, Solution


def xor_normalize(inst: Instance, mask: BitVector) -> Instance:
    """Replace every vector v by v XOR mask; colors are kept. Applying it twice is the identity."""
    if mask.dim != inst.dim:
        raise DimensionMismatchError(f"mask has dimension {mask.dim}, instance has {inst.dim}")
    return Instance(
        inst.dim,
        tuple(v.xor(mask) for v in inst.reds),
        tuple(v.xor(mask) for v in inst.blues),
    )


def swap_colors(inst: Instance) -> Instance:
    return Instance(inst.dim, reds=inst.blues, blues=inst.reds)


def _check_permutation(dim: int, permutation: Sequence[int]) -> None:
    if sorted(permutation) != list(range(1, dim + 1)):
        raise ValueError(f"not a permutation of [1, {dim}]: {list(permutation)}")


def permute_vector(vector: BitVector, permutation: Sequence[int]) -> BitVector:
    """Coordinate i moves to permutation[i-1]."""
    return BitVector.from_coordinates(vector.dim, (permutation[i - 1] for i in vector.support))


def permute_coordinates(inst: Instance, permutation: Sequence[int]) -> Instance:
    _check_permutation(inst.dim, permutation)
    return Instance(
        inst.dim,
        tuple(permute_vector(v, permutation) for v in inst.reds),
        tuple(permute_vector(v, permutation) for v in inst.blues),
    )


def map_xor_solution(solution: Solution, mask: BitVector) -> Solution:
    return Solution(solution.center.xor(mask), solution.radius)


def map_swap_solution(solution: Solution) -> Solution:
    """
    Witness for the color-swapped instance: complement center, radius d − r − 1.

    δ(v, c̄) = d − δ(v, c), so blues at distance ≤ r become reds at ≥ d − r and
    reds at ≥ r + 1 become blues at ≤ d − r − 1. Needs r < d, which holds for
    any witness of an instance with at least one red.
    """
    dim = solution.center.dim
    if solution.radius >= dim:
        raise ValueError(f"radius {solution.radius} leaves no room for a swapped witness in d={dim}")
    return Solution(solution.center.complement(), dim - solution.radius - 1)


def map_permuted_solution(solution: Solution, permutation: Sequence[int]) -> Solution:
    _check_permutation(solution.center.dim, permutation)
    return Solution(permute_vector(solution.center, permutation), solution.radius)
