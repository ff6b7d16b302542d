"""
HyperBall - Exact Simplex

Two-phase tableau simplex over fractions.Fraction with Bland's rule (smallest
entering index, ties in the ratio test broken by smallest basic index), so it
terminates on degenerate programs and needs no tolerances.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LpResult:
    status: LpStatus
    values: Optional[List[Fraction]] = None
    objective: Optional[Fraction] = None


class SimplexTableau:
    """Rows of A·y = b with y ≥ 0 and a basic column per row."""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        factor = row[col]
        self.rows[r] = [a / factor for a in row]
        self.rhs[r] = self.rhs[r] / factor
        pivot_row = self.rows[r]
        for k in range(len(self.rows)):
            if k == r:
                continue
            f = self.rows[k][col]
            if f == 0:
                continue
            self.rows[k] = [a - f * p for a, p in zip(self.rows[k], pivot_row)]
            self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = col
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        reduced = list(cost)
        for r, basic in enumerate(self.basis):
            cb = cost[basic]
            if cb == 0:
                continue
            for j, a in enumerate(self.rows[r]):
                if a != 0:
                    reduced[j] -= cb * a
        return reduced

    def maximize(self, cost: Sequence[Fraction], allowed: Optional[Sequence[bool]] = None) -> LpStatus:
        """Bland's-rule primal simplex; `allowed` masks columns that may enter."""
        while True:
            reduced = self.reduced_costs(cost)
            entering = next(
                (j for j in range(self.num_columns) if reduced[j] > 0 and (allowed is None or allowed[j])),
                None,
            )
            if entering is None:
                return LpStatus.OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a <= 0:
                    continue
                key = (self.rhs[r] / a, self.basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
            if best is None:
                return LpStatus.UNBOUNDED
            self.pivot(best[1], entering)

    def values(self) -> List[Fraction]:
        result = [Fraction(0)] * self.num_columns
        for r, basic in enumerate(self.basis):
            result[basic] = self.rhs[r]
        return result


def maximize_leq(
    coefficients: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    objective: Sequence[Fraction],
) -> LpResult:
    """
    maximize objective·y  subject to  coefficients·y ≤ rhs,  y ≥ 0.

    A slack per row; rows with negative rhs are negated and get an artificial
    variable for phase one.
    """
    m = len(rhs)
    n = len(objective)
    slack0 = n
    art0 = n + m
    needs_artificial = [Fraction(b) < 0 for b in rhs]
    artificials = [r for r in range(m) if needs_artificial[r]]
    width = n + m + len(artificials)

    rows: List[List[Fraction]] = []
    b: List[Fraction] = []
    basis: List[int] = []
    for r in range(m):
        row = [Fraction(a) for a in coefficients[r]] + [Fraction(0)] * (width - n)
        row[slack0 + r] = Fraction(1)
        value = Fraction(rhs[r])
        if needs_artificial[r]:
            row = [-a for a in row]
            value = -value
            column = art0 + artificials.index(r)
            row[column] = Fraction(1)
            basis.append(column)
        else:
            basis.append(slack0 + r)
        rows.append(row)
        b.append(value)

    tableau = SimplexTableau(rows, b, basis)

    if artificials:
        phase_one = [Fraction(0)] * width
        for k in range(len(artificials)):
            phase_one[art0 + k] = Fraction(-1)
        tableau.maximize(phase_one)
        if sum(tableau.values()[art0:]) > 0:
            logger.debug(f"❌ phase one ended with positive artificial sum after {tableau.pivots} pivots")
            return LpResult(LpStatus.INFEASIBLE)
        _drive_out_artificials(tableau, art0)

    real_columns = [j < art0 for j in range(tableau.num_columns)]
    cost = [Fraction(c) for c in objective] + [Fraction(0)] * (tableau.num_columns - n)
    status = tableau.maximize(cost, allowed=real_columns)
    if status is not LpStatus.OPTIMAL:
        return LpResult(status)

    values = tableau.values()[:n]
    objective_value = sum((Fraction(c) * v for c, v in zip(objective, values)), Fraction(0))
    logger.debug(f"📊 simplex optimal after {tableau.pivots} pivots, objective {objective_value}")
    return LpResult(LpStatus.OPTIMAL, values, objective_value)


def _drive_out_artificials(tableau: SimplexTableau, art0: int) -> None:
    """Pivot zero-valued artificials out of the basis; drop rows that are entirely redundant."""
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] < art0:
            r += 1
            continue
        column = next((j for j in range(art0) if tableau.rows[r][j] != 0), None)
        if column is None:
            del tableau.rows[r]
            del tableau.rhs[r]
            del tableau.basis[r]
            continue
        tableau.pivot(r, column)
        r += 1
