"""
HyperBall - Low-Conciseness Solver

Linear-time algorithm for instances whose vectors have at most three ones.
For a fixed center c the quantity q(v) = con(v) − 2|O(v) ∩ O(c)| orders the
vectors exactly as their distances to c do, and c is a solution iff every blue
q stays strictly below every red q. With icon ≤ 3 the smallest red q, M_r,
lies in [−3, 3]; four cases on M_r cover every solution. The two outer cases
each have a single candidate, the two middle ones become 2-SAT formulas.

Licensed under the MIT License.
"""

import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from hyperball.core.exceptions import SolverLimitError, VerificationError
from hyperball.services.csp.relations import Relation, all_ones, all_zeros, at_least, at_most
from hyperball.services.csp.two_sat import TwoSatFormula, solve_2sat
from hyperball.services.geometry import (
    BitVector,
    Instance,
    Solution,
    canonical_radius,
    degenerate_solution,
    is_degenerate,
)

logger = logging.getLogger(__name__)

MAX_ICON = 3


class CaseId(Enum):
    RED_MIN_NEGATIVE = "M_r <= -1"
    RED_MIN_ZERO = "M_r = 0"
    RED_MIN_ONE = "M_r = 1"
    RED_MIN_AT_LEAST_TWO = "M_r >= 2"


CASE_ORDER = (
    CaseId.RED_MIN_NEGATIVE,
    CaseId.RED_MIN_ZERO,
    CaseId.RED_MIN_ONE,
    CaseId.RED_MIN_AT_LEAST_TWO,
)

# (color, con(v)) -> relation on the support of v
_CASE_RELATIONS: Dict[CaseId, Dict[Tuple[str, int], Relation]] = {
    CaseId.RED_MIN_ZERO: {
        ("blue", 1): all_ones(1),
        ("blue", 2): all_ones(2),
        ("blue", 3): at_least(2, 3),
        ("red", 1): all_zeros(1),
        ("red", 2): at_most(1, 2),
        ("red", 3): at_most(1, 3),
    },
    CaseId.RED_MIN_ONE: {
        ("blue", 1): all_ones(1),
        ("blue", 2): at_least(1, 2),
        ("blue", 3): at_least(2, 3),
        ("red", 1): all_zeros(1),
        ("red", 2): all_zeros(2),
        ("red", 3): at_most(1, 3),
    },
}


def _check_icon(inst: Instance) -> None:
    if inst.icon > MAX_ICON:
        raise SolverLimitError(f"csp3 requires data conciseness ≤ {MAX_ICON}, got icon={inst.icon}")


def _empty_support_excludes(inst: Instance, case: CaseId) -> bool:
    """
    An all-zero vector has q = 0 for every center. A blue one rules out the
    cases needing every blue q ≤ −1; a red one rules out those needing every
    red q ≥ 1.
    """
    zero_blue = any(b.conciseness == 0 for b in inst.blues)
    zero_red = any(r.conciseness == 0 for r in inst.reds)
    if case in (CaseId.RED_MIN_NEGATIVE, CaseId.RED_MIN_ZERO):
        return zero_blue
    return zero_red


def build_case_csp(inst: Instance, case: CaseId) -> TwoSatFormula:
    """Variables are the coordinates; one relation per vector with non-empty support."""
    if case not in _CASE_RELATIONS:
        raise ValueError(f"case {case.value} is not solved through a CSP")
    _check_icon(inst)

    relations = _CASE_RELATIONS[case]
    formula = TwoSatFormula(inst.dim)
    for color, vectors in (("blue", inst.blues), ("red", inst.reds)):
        for vector in vectors:
            arity = vector.conciseness
            if arity == 0:
                continue
            if arity > MAX_ICON:
                raise ValueError(f"scope of arity {arity} has no relation in case {case.value}")
            for clause in relations[(color, arity)].clauses(vector.support):
                formula.add_clause(*clause)
    return formula


def case_candidate(inst: Instance, case: CaseId) -> Optional[BitVector]:
    _check_icon(inst)
    if _empty_support_excludes(inst, case):
        return None

    if case is CaseId.RED_MIN_NEGATIVE:
        if any(b.conciseness == 1 for b in inst.blues):
            return None
        return BitVector.from_coordinates(inst.dim, (i for b in inst.blues for i in b.support))

    if case is CaseId.RED_MIN_AT_LEAST_TWO:
        red_union = {i for r in inst.reds for i in r.support}
        return BitVector.from_coordinates(inst.dim, (i for i in range(1, inst.dim + 1) if i not in red_union))

    assignment = solve_2sat(build_case_csp(inst, case))
    if assignment is None:
        return None
    return BitVector.from_coordinates(inst.dim, (var for var, value in assignment.items() if value))


def solve_icon3(inst: Instance) -> Optional[Solution]:
    """First verified candidate over the four cases, in order."""
    _check_icon(inst)
    if is_degenerate(inst):
        return degenerate_solution(inst)

    for case in CASE_ORDER:
        center = case_candidate(inst, case)
        if center is None:
            logger.debug(f"🔍 case {case.value}: no candidate")
            continue
        radius = canonical_radius(inst, center)
        if radius is not None:
            logger.info(f"✅ case {case.value} gives center of conciseness {center.conciseness}")
            return Solution(center, radius)
        if case in _CASE_RELATIONS:
            raise VerificationError(
                f"case {case.value}: CSP solution {list(center.support)} does not separate the instance"
            )
    return None


def case_formulas(inst: Instance) -> List[Tuple[CaseId, TwoSatFormula]]:
    """The two CSP-backed cases with their formulas (for --dump-2sat)."""
    return [(case, build_case_csp(inst, case)) for case in CASE_ORDER if case in _CASE_RELATIONS]
