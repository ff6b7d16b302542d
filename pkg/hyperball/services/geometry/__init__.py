"""Hamming geometry: vectors, instances, verification, transforms and the instance file format."""

from hyperball.services.geometry.instance_format import (
    load_instance,
    parse_instance,
    save_instance,
    write_instance,
)
from hyperball.services.geometry.transforms import (
    map_permuted_solution,
    map_swap_solution,
    map_xor_solution,
    permute_coordinates,
    swap_colors,
    xor_normalize,
)
from hyperball.services.geometry.vectors import (
    BitVector,
    Instance,
    Solution,
    canonical_radius,
    degenerate_solution,
    enumerate_supports,
    first_violation,
    hamming,
    is_degenerate,
    verify,
)

__all__ = [
    "BitVector",
    "Instance",
    "Solution",
    "canonical_radius",
    "degenerate_solution",
    "enumerate_supports",
    "first_violation",
    "hamming",
    "is_degenerate",
    "load_instance",
    "map_permuted_solution",
    "map_swap_solution",
    "map_xor_solution",
    "parse_instance",
    "permute_coordinates",
    "save_instance",
    "swap_colors",
    "verify",
    "write_instance",
    "xor_normalize",
]
