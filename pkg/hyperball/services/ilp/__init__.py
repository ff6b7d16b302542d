"""Column-type integer model and its bounded feasibility search."""

from hyperball.services.ilp.column_model import (
    ColumnIlp,
    ColumnType,
    LinearConstraint,
    build_ilp,
    column_types,
    dump_ilp,
    reconstruct_center,
    solve_ilp,
)
from hyperball.services.ilp.feasibility import dual_fix, find_feasible, solve_ilp_feasibility

__all__ = [
    "ColumnIlp",
    "ColumnType",
    "LinearConstraint",
    "build_ilp",
    "column_types",
    "dual_fix",
    "dump_ilp",
    "find_feasible",
    "reconstruct_center",
    "solve_ilp",
    "solve_ilp_feasibility",
]
