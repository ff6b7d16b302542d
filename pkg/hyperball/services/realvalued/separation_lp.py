"""
HyperBall - Real-Valued Separation LP

A center x separates iff ||b − x||² < ||r − x||² for every blue b and red r.
The quadratic terms in x cancel, leaving

    Σ 2(r_i − b_i)·x_i + ε ≤ Σ (r_i² − b_i²)

per pair. Maximizing the slack ε ∈ [0, 1] turns the strict inequalities into
a plain LP: the instance separates iff the optimum ε* is positive.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from hyperball.core.exceptions import VerificationError
from hyperball.services.realvalued.real_instance import RealInstance, RealVector, squared_distance, strictly_separates
from hyperball.services.realvalued.simplex import LpStatus, maximize_leq

logger = logging.getLogger(__name__)

LE = "<="
GE = ">="


@dataclass(frozen=True)
class LinearConstraint:
    """Σ coefficients · (x_1..x_d, ε)  sense  rhs."""

    coefficients: Tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    kind: str = "pair"


@dataclass
class LinearProgram:
    dim: int
    bounded_center: bool = True
    constraints: List[LinearConstraint] = field(default_factory=list)

    @property
    def pair_constraints(self) -> List[LinearConstraint]:
        return [c for c in self.constraints if c.kind == "pair"]

    @property
    def box_constraints(self) -> List[LinearConstraint]:
        return [c for c in self.constraints if c.kind == "box"]

    @property
    def slack_index(self) -> int:
        return self.dim


@dataclass(frozen=True)
class RealSolution:
    center: RealVector
    radius_squared: Fraction
    slack: Fraction


def _unit(size: int, index: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == index else 0) for j in range(size))


def build_separation_lp(inst: RealInstance, bounded_center: bool = True) -> LinearProgram:
    size = inst.dim + 1
    program = LinearProgram(inst.dim, bounded_center)
    for red in inst.reds:
        for blue in inst.blues:
            coefficients = tuple(2 * (r - b) for r, b in zip(red, blue)) + (Fraction(1),)
            rhs = sum((r * r - b * b for r, b in zip(red, blue)), Fraction(0))
            program.constraints.append(LinearConstraint(coefficients, LE, rhs))

    bounded = range(size) if bounded_center else (program.slack_index,)
    for index in bounded:
        program.constraints.append(LinearConstraint(_unit(size, index), GE, Fraction(0), kind="box"))
        program.constraints.append(LinearConstraint(_unit(size, index), LE, Fraction(1), kind="box"))
    return program


def _to_standard_form(program: LinearProgram):
    """
    Columns: x_i (or x_i⁺, x_i⁻ for an unbounded center), then ε. Lower bounds
    of 0 become the simplex sign constraints; everything else becomes a ≤ row.
    """
    free = not program.bounded_center
    columns: List[Tuple[int, int]] = []
    for i in range(program.dim):
        columns.append((i, 1))
        if free:
            columns.append((i, -1))
    columns.append((program.slack_index, 1))

    rows, rhs = [], []
    for constraint in program.constraints:
        if constraint.kind == "box" and constraint.sense == GE and constraint.rhs == 0:
            continue
        sign = 1 if constraint.sense == LE else -1
        rows.append([sign * constraint.coefficients[var] * s for var, s in columns])
        rhs.append(sign * constraint.rhs)
    objective = [Fraction(1) if var == program.slack_index else Fraction(0) for var, _ in columns]
    return columns, rows, rhs, objective


def solve_lp(program: LinearProgram) -> Optional[Tuple[Tuple[Fraction, ...], Fraction]]:
    """Optimal (x, ε*) of the program, or None if it is infeasible."""
    columns, rows, rhs, objective = _to_standard_form(program)
    result = maximize_leq(rows, rhs, objective)
    if result.status is not LpStatus.OPTIMAL:
        logger.debug(f"⚠️ separation LP ended {result.status.value}")
        return None
    x = [Fraction(0)] * program.dim
    slack = Fraction(0)
    for (var, sign), value in zip(columns, result.values):
        if var == program.slack_index:
            slack = value
        else:
            x[var] += sign * value
    return tuple(x), slack


def _point_off_reds(inst: RealInstance) -> RealSolution:
    """With no blues any point that is not red works, radius 0; constant vectors 0, 1, 1/2, 1/3, ... are tried."""
    reds = set(inst.reds)
    k = 0
    while True:
        value = Fraction(0) if k == 0 else Fraction(1, k)
        center = tuple(value for _ in range(inst.dim))
        if center not in reds:
            return RealSolution(center, Fraction(0), Fraction(1))
        k += 1


def solve_real(inst: RealInstance, bounded_center: bool = True) -> Optional[RealSolution]:
    """Center and squared radius when the LP optimum slack is positive."""
    if not inst.blues:
        return _point_off_reds(inst)

    optimum = solve_lp(build_separation_lp(inst, bounded_center))
    if optimum is None:
        return None
    center, slack = optimum
    if slack <= 0:
        logger.info("❌ no strictly separating real center (optimal slack 0)")
        return None

    if not strictly_separates(inst, center):
        raise VerificationError("LP center with positive slack does not strictly separate")
    radius_squared = max(squared_distance(b, center) for b in inst.blues)
    logger.info(f"✅ real center found with slack {slack}")
    return RealSolution(center, radius_squared, slack)
