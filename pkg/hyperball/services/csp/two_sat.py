"""
HyperBall - 2-SAT

Implication-graph solver: strongly connected components via networkx, a
variable is true iff its positive literal's component comes after the negative
one in a topological order of the condensation.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)


@dataclass
class TwoSatFormula:
    """Variables 1..num_vars; clauses are tuples of one or two DIMACS literals."""

    num_vars: int
    clauses: List[Tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self) -> None:
        for clause in self.clauses:
            self._check(clause)

    def _check(self, clause: Tuple[int, ...]) -> None:
        if len(clause) not in (1, 2):
            raise ValueError(f"2-SAT clauses have one or two literals, got {clause}")
        for literal in clause:
            if literal == 0 or abs(literal) > self.num_vars:
                raise ValueError(f"literal {literal} outside variables 1..{self.num_vars}")

    def add_clause(self, *literals: int) -> None:
        clause = tuple(literals)
        self._check(clause)
        self.clauses.append(clause)

    def is_satisfied_by(self, assignment: Dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in clause) for clause in self.clauses)


def implication_graph(formula: TwoSatFormula) -> nx.DiGraph:
    graph = nx.DiGraph()
    for var in range(1, formula.num_vars + 1):
        graph.add_node(var)
        graph.add_node(-var)
    for clause in formula.clauses:
        if len(clause) == 1:
            (a,) = clause
            graph.add_edge(-a, a)
        else:
            a, b = clause
            graph.add_edge(-a, b)
            graph.add_edge(-b, a)
    return graph


def solve_2sat(formula: TwoSatFormula) -> Optional[Dict[int, bool]]:
    """
    Satisfying assignment {var: bool}, or None when unsatisfiable.

    Components made only of negative literals are ordered last, so a variable
    the clauses leave free comes out false.
    """
    graph = implication_graph(formula)
    condensed = nx.condensation(graph)
    component_of = condensed.graph["mapping"]

    for var in range(1, formula.num_vars + 1):
        if component_of[var] == component_of[-var]:
            logger.debug(f"❌ x{var} and ¬x{var} share a component")
            return None

    def order_key(component: int) -> Tuple[int, int]:
        members = condensed.nodes[component]["members"]
        only_negative = all(literal < 0 for literal in members)
        return (1 if only_negative else 0, min(abs(literal) for literal in members))

    position = {
        component: index
        for index, component in enumerate(nx.lexicographical_topological_sort(condensed, key=order_key))
    }
    return {
        var: position[component_of[var]] > position[component_of[-var]]
        for var in range(1, formula.num_vars + 1)
    }


def to_dimacs(formula: TwoSatFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
