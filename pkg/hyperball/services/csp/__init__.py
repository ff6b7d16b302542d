"""Majority-closed Boolean CSPs, 2-SAT and the icon ≤ 3 solver."""

from hyperball.services.csp.lowcon import (
    CASE_ORDER,
    CaseId,
    build_case_csp,
    case_candidate,
    case_formulas,
    solve_icon3,
)
from hyperball.services.csp.relations import (
    GAMMA4_BLUE,
    GAMMA4_RED,
    Relation,
    all_ones,
    all_zeros,
    at_least,
    at_most,
    majority,
    majority_tuple,
)
from hyperball.services.csp.two_sat import TwoSatFormula, implication_graph, solve_2sat, to_dimacs

__all__ = [
    "CASE_ORDER",
    "CaseId",
    "GAMMA4_BLUE",
    "GAMMA4_RED",
    "Relation",
    "TwoSatFormula",
    "all_ones",
    "all_zeros",
    "at_least",
    "at_most",
    "build_case_csp",
    "case_candidate",
    "case_formulas",
    "implication_graph",
    "majority",
    "majority_tuple",
    "solve_2sat",
    "solve_icon3",
    "to_dimacs",
]
