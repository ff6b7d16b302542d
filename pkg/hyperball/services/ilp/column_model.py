"""
HyperBall - Column-Type Integer Model

Coordinates whose columns (read down blues then reds) coincide are
interchangeable: only how many of them the center sets matters. One bounded
integer variable per column type therefore captures the whole search space,
with one linear constraint per (blue, red) pair.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from hyperball.core.exceptions import VerificationError
from hyperball.services.geometry import (
    BitVector,
    Instance,
    Solution,
    canonical_radius,
    degenerate_solution,
    is_degenerate,
)
from hyperball.services.ilp.feasibility import solve_ilp_feasibility

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnType:
    signature: Tuple[int, ...]
    coords: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class LinearConstraint:
    """Σ coefficients[i] · x_i ≤ rhs."""

    coefficients: Tuple[int, ...]
    rhs: int
    blue: int
    red: int


@dataclass
class ColumnIlp:
    types: List[ColumnType]
    constraints: List[LinearConstraint] = field(default_factory=list)

    @property
    def upper_bounds(self) -> Tuple[int, ...]:
        return tuple(t.count for t in self.types)

    @property
    def num_variables(self) -> int:
        return len(self.types)


def column_types(inst: Instance) -> List[ColumnType]:
    """Partition [1, d] by column signature, types ordered by their first coordinate."""
    vectors = inst.vectors
    holders: Dict[int, List[int]] = {i: [] for i in range(1, inst.dim + 1)}
    for index, vector in enumerate(vectors):
        for coordinate in vector.support:
            holders[coordinate].append(index)

    groups: Dict[FrozenSet[int], List[int]] = {}
    for coordinate in range(1, inst.dim + 1):
        groups.setdefault(frozenset(holders[coordinate]), []).append(coordinate)

    types = []
    for rows, coords in groups.items():
        signature = tuple(1 if k in rows else 0 for k in range(len(vectors)))
        types.append(ColumnType(signature, tuple(coords)))
    types.sort(key=lambda t: t.coords[0])
    return types


def build_ilp(inst: Instance) -> ColumnIlp:
    """
    δ restricted to a type with signature bit s is s·n + (1 − 2s)·x, so
    δ(c, b) + 1 ≤ δ(c, r) becomes Σ 2(s_r − s_b)·x ≤ Σ (s_r − s_b)·n − 1.
    """
    if is_degenerate(inst):
        raise ValueError("column ILP needs at least one red and one blue vector")

    types = column_types(inst)
    model = ColumnIlp(types)
    n_blue = len(inst.blues)
    for b in range(n_blue):
        for r in range(len(inst.reds)):
            row = n_blue + r
            coefficients = tuple(2 * (t.signature[row] - t.signature[b]) for t in types)
            rhs = sum((t.signature[row] - t.signature[b]) * t.count for t in types) - 1
            model.constraints.append(LinearConstraint(coefficients, rhs, blue=b, red=r))
    logger.debug(f"📊 column ILP: {model.num_variables} variables, {len(model.constraints)} constraints")
    return model


def reconstruct_center(inst: Instance, model: ColumnIlp, assignment: Sequence[int]) -> Solution:
    """Set the first x_i coordinates of each type; any placement inside a type gives the same distances."""
    support = []
    for column_type, ones in zip(model.types, assignment):
        support.extend(column_type.coords[:ones])
    center = BitVector.from_coordinates(inst.dim, support)
    radius = canonical_radius(inst, center)
    if radius is None:
        raise VerificationError(f"ILP assignment {list(assignment)} yields a non-separating center")
    return Solution(center, radius)


def solve_ilp(inst: Instance, presolve: bool = True) -> Optional[Solution]:
    if is_degenerate(inst):
        return degenerate_solution(inst)
    model = build_ilp(inst)
    assignment = solve_ilp_feasibility(model, presolve=presolve)
    if assignment is None:
        return None
    return reconstruct_center(inst, model, assignment)


def dump_ilp(model: ColumnIlp) -> str:
    lines = [f"# column-type ILP: {model.num_variables} variables, {len(model.constraints)} constraints"]
    lines.append("bounds")
    for index, column_type in enumerate(model.types, start=1):
        coords = " ".join(map(str, column_type.coords))
        lines.append(f"0 <= x{index} <= {column_type.count}  # coords {coords}")
    lines.append("constraints")
    for number, constraint in enumerate(model.constraints, start=1):
        terms = [f"{a:+d} x{i}" for i, a in enumerate(constraint.coefficients, start=1) if a != 0]
        lhs = " ".join(terms) if terms else "0"
        lines.append(f"c{number}: {lhs} <= {constraint.rhs}  # blue {constraint.blue + 1} / red {constraint.red + 1}")
    return "\n".join(lines) + "\n"
