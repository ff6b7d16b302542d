"""Real-valued separation through an exact rational LP."""

from hyperball.services.realvalued.real_instance import (
    RealInstance,
    load_real_instance,
    parse_real_instance,
    squared_distance,
    strictly_separates,
    write_real_instance,
)
from hyperball.services.realvalued.separation_lp import (
    LinearConstraint,
    LinearProgram,
    RealSolution,
    build_separation_lp,
    solve_lp,
    solve_real,
)
from hyperball.services.realvalued.simplex import LpResult, LpStatus, SimplexTableau, maximize_leq

__all__ = [
    "LinearConstraint",
    "LinearProgram",
    "LpResult",
    "LpStatus",
    "RealInstance",
    "RealSolution",
    "SimplexTableau",
    "build_separation_lp",
    "load_real_instance",
    "maximize_leq",
    "parse_real_instance",
    "solve_lp",
    "solve_real",
    "squared_distance",
    "strictly_separates",
    "write_real_instance",
]
