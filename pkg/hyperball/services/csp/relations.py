"""
HyperBall - Boolean Relations

Explicit tuple sets for the relations used by the low-conciseness solver and
the Γ4 reduction, the ternary majority operation, and the translation of a
majority-closed relation into unit and binary clauses.

Licensed under the MIT License.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, List, Sequence, Set, Tuple

Clause = Tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    tuples: FrozenSet[Tuple[int, ...]]

    def __contains__(self, row: Tuple[int, ...]) -> bool:
        return tuple(row) in self.tuples

    def is_majority_closed(self) -> bool:
        """True iff majority(t1, t2, t3) stays in the relation for every triple of its tuples."""
        rows = sorted(self.tuples)
        for t1, t2, t3 in product(rows, repeat=3):
            if majority_tuple(t1, t2, t3) not in self.tuples:
                return False
        return True

    def clauses(self, scope: Sequence[int]) -> List[Clause]:
        """
        Unit and binary clauses (DIMACS literals over the scope variables) whose
        models are exactly the relation, provided it is majority-closed.

        Units come from the one-coordinate projections; a binary clause is added
        for every pair pattern missing from the two-coordinate projection unless
        a unit already excludes it.
        """
        if len(scope) != self.arity:
            raise ValueError(f"{self.name} has arity {self.arity}, scope has {len(scope)} variables")

        clauses: List[Clause] = []
        excluded: Dict[int, Set[int]] = {}
        for i, var in enumerate(scope):
            values = {row[i] for row in self.tuples}
            for value in (1, 0):
                if value not in values:
                    clauses.append((var if value == 0 else -var,))
                    excluded.setdefault(i, set()).add(value)

        for i, j in combinations(range(self.arity), 2):
            seen = {(row[i], row[j]) for row in self.tuples}
            for a, b in product((0, 1), repeat=2):
                if (a, b) in seen or a in excluded.get(i, ()) or b in excluded.get(j, ()):
                    continue
                lit_i = -scope[i] if a == 1 else scope[i]
                lit_j = -scope[j] if b == 1 else scope[j]
                clauses.append((lit_i, lit_j))
        return clauses


def majority(a: int, b: int, c: int) -> int:
    return 1 if a + b + c >= 2 else 0


def majority_tuple(t1: Tuple[int, ...], t2: Tuple[int, ...], t3: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(majority(a, b, c) for a, b, c in zip(t1, t2, t3))


def _by_ones(name: str, arity: int, keep: Callable[[int], bool]) -> Relation:
    rows = frozenset(row for row in product((0, 1), repeat=arity) if keep(sum(row)))
    return Relation(name, arity, rows)


def all_ones(arity: int) -> Relation:
    return _by_ones(f"R_O^{arity}", arity, lambda ones: ones == arity)


def all_zeros(arity: int) -> Relation:
    return _by_ones(f"R_Z^{arity}", arity, lambda ones: ones == 0)


def at_most(k: int, arity: int) -> Relation:
    return _by_ones(f"R^{arity}_<={k}", arity, lambda ones: ones <= k)


def at_least(k: int, arity: int) -> Relation:
    return _by_ones(f"R^{arity}_>={k}", arity, lambda ones: ones >= k)


# Γ4: the language of the icon = 4 hardness construction
GAMMA4_RED = at_most(2, 4)
GAMMA4_BLUE = at_least(3, 4)
