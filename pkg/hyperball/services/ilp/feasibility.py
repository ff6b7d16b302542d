"""
HyperBall - Bounded Integer Feasibility

Depth-first search over bounded integer variables, values ascending, with
per-constraint interval pruning: after fixing a prefix, a constraint survives
only if its partial sum plus the smallest achievable suffix stays within rhs.

Licensed under the MIT License.
"""

import logging
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

if TYPE_CHECKING:
    from hyperball.services.ilp.column_model import ColumnIlp

logger = logging.getLogger(__name__)


def dual_fix(coefficient_columns: Sequence[Sequence[int]], upper_bounds: Sequence[int]) -> Dict[int, int]:
    """
    Fix a variable to 0 when none of its coefficients is negative, and to its
    upper bound when none is positive and one is negative. Either move can only
    lower every left-hand side.
    """
    fixed = {}
    for var, column in enumerate(coefficient_columns):
        if all(a >= 0 for a in column):
            fixed[var] = 0
        elif all(a <= 0 for a in column):
            fixed[var] = upper_bounds[var]
    return fixed


def find_feasible(
    coefficients: Sequence[Sequence[int]],
    rhs: Sequence[int],
    upper_bounds: Sequence[int],
    presolve: bool = True,
) -> Optional[List[int]]:
    """First assignment (in DFS order) with Σ a·x ≤ rhs for every row, or None."""
    n = len(upper_bounds)
    m = len(rhs)
    columns = [[coefficients[row][var] for row in range(m)] for var in range(n)]
    fixed = dual_fix(columns, upper_bounds) if presolve else {}

    assignment = [fixed.get(var, 0) for var in range(n)]
    free = [var for var in range(n) if var not in fixed]

    partial = [
        sum(coefficients[row][var] * value for var, value in fixed.items())
        for row in range(m)
    ]
    # suffix_min[k][row]: least contribution of free[k:] to row
    suffix_min: List[List[int]] = [[0] * m for _ in range(len(free) + 1)]
    for k in range(len(free) - 1, -1, -1):
        var = free[k]
        for row in range(m):
            a = coefficients[row][var]
            suffix_min[k][row] = suffix_min[k + 1][row] + min(0, a * upper_bounds[var])

    if any(partial[row] + suffix_min[0][row] > rhs[row] for row in range(m)):
        return None

    # rows with a nonzero coefficient, per variable
    touched = [[row for row in range(m) if columns[var][row] != 0] for var in range(n)]
    nodes = 0

    def descend(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if k == len(free):
            return True
        var = free[k]
        column = columns[var]
        rows = touched[var]
        for value in range(upper_bounds[var] + 1):
            ok = True
            for row in rows:
                if partial[row] + column[row] * value + suffix_min[k + 1][row] > rhs[row]:
                    ok = False
                    break
            if not ok:
                continue
            for row in rows:
                partial[row] += column[row] * value
            assignment[var] = value
            if descend(k + 1):
                return True
            for row in rows:
                partial[row] -= column[row] * value
        assignment[var] = 0
        return False

    found = descend(0)
    logger.debug(f"📊 feasibility DFS: {len(free)} free / {n} variables, {nodes} nodes")
    return assignment if found else None


def solve_ilp_feasibility(model: "ColumnIlp", presolve: bool = True) -> Optional[Tuple[int, ...]]:
    coefficients = [c.coefficients for c in model.constraints]
    rhs = [c.rhs for c in model.constraints]
    assignment = find_feasible(coefficients, rhs, model.upper_bounds, presolve=presolve)
    return tuple(assignment) if assignment is not None else None
