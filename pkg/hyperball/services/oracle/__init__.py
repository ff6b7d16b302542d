"""Exhaustive reference solvers."""

from hyperball.services.oracle.brute_force import (
    OptimalSolution,
    brute_force_solve,
    solve_bounded_conciseness,
)

__all__ = ["OptimalSolution", "brute_force_solve", "solve_bounded_conciseness"]
