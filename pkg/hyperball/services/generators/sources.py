"""
HyperBall - Source Problems

The problems the hardness constructions start from, their line-oriented file
formats and small exhaustive solvers used to check reductions end to end.

    Minimum Radius      core instance format, one color only, even d
    Hitting Set         k <int> / u <elements...> (optional) / s <elements...>
    MCIS                k <int> (optional) / p <vertices...> / e <u> <v>
    Γ4 CSP              <R|B> v1 v2 v3 v4

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from hyperball.core.exceptions import InstanceError, ParseError
from hyperball.services.geometry import BitVector, hamming
from hyperball.services.geometry.instance_format import content_lines, parse_instance, parse_int, write_instance
from hyperball.services.geometry.vectors import Instance

logger = logging.getLogger(__name__)

BRUTE_SOURCE_LIMIT = 12


def _check_limit(size: int, what: str) -> None:
    if size > BRUTE_SOURCE_LIMIT:
        raise InstanceError(f"{what} = {size} is beyond the exhaustive source solvers (limit {BRUTE_SOURCE_LIMIT})")


# --- Minimum Radius -----------------------------------------------------------


@dataclass(frozen=True)
class MRInstance:
    """Is there a center within distance n of every vector of {0,1}^{2n}?"""

    n: int
    vectors: Tuple[BitVector, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InstanceError(f"MR needs n ≥ 1, got {self.n}")
        for vector in self.vectors:
            if vector.dim != 2 * self.n:
                raise InstanceError(f"MR vector of dimension {vector.dim}, expected {2 * self.n}")

    @property
    def dim(self) -> int:
        return 2 * self.n


def parse_mr(text: str) -> MRInstance:
    inst = parse_instance(text)
    if inst.reds and inst.blues:
        raise ParseError("MR files use a single color")
    if inst.dim % 2:
        raise ParseError(f"MR dimension must be even, got {inst.dim}")
    return MRInstance(inst.dim // 2, inst.blues or inst.reds)


def write_mr(mr: MRInstance) -> str:
    return write_instance(Instance(mr.dim, blues=mr.vectors))


def solve_mr_bf(mr: MRInstance) -> bool:
    _check_limit(mr.dim, "2n")
    for bits in product((0, 1), repeat=mr.dim):
        center = BitVector(mr.dim, tuple(i + 1 for i, bit in enumerate(bits) if bit))
        if all(hamming(v, center) <= mr.n for v in mr.vectors):
            return True
    return False


def solve_rest_mr_bf(mr: MRInstance) -> bool:
    """Centers with exactly n ones only."""
    _check_limit(mr.dim, "2n")
    for support in combinations(range(1, mr.dim + 1), mr.n):
        center = BitVector(mr.dim, support)
        if all(hamming(v, center) <= mr.n for v in mr.vectors):
            return True
    return False


def rest_mr_variants(mr: MRInstance) -> List[MRInstance]:
    """For every x in V, V shifted by XOR x (so it contains the zero vector)."""
    variants = []
    for x in mr.vectors:
        shifted = tuple(dict.fromkeys(v.xor(x) for v in mr.vectors))
        variants.append(MRInstance(mr.n, shifted))
    return variants


# --- Hitting Set -----------------------------------------------------------------


@dataclass(frozen=True)
class HittingSetInstance:
    universe: Tuple[str, ...]
    family: Tuple[Tuple[str, ...], ...]
    k: int

    @property
    def set_size(self) -> int:
        """ℓ, the common size of the sets (0 for an empty family)."""
        sizes = {len(s) for s in self.family}
        if len(sizes) > 1:
            raise InstanceError(f"sets must share one size, got sizes {sorted(sizes)}")
        return sizes.pop() if sizes else 0


def parse_hitting_set(text: str) -> HittingSetInstance:
    k: Optional[int] = None
    universe: Dict[str, None] = {}
    family: List[Tuple[str, ...]] = []
    for number, tokens in content_lines(text):
        tag, rest = tokens[0], tokens[1:]
        if tag == "k":
            if len(rest) != 1:
                raise ParseError("expected 'k <int>'", number)
            k = parse_int(rest[0], number, "budget")
        elif tag == "u":
            universe.update(dict.fromkeys(rest))
        elif tag == "s":
            if len(set(rest)) != len(rest):
                raise ParseError("repeated element inside a set", number)
            family.append(tuple(rest))
            universe.update(dict.fromkeys(rest))
        else:
            raise ParseError(f"unknown line tag {tag!r}", number)
    if k is None:
        raise ParseError("missing budget line 'k <int>'")
    return HittingSetInstance(tuple(universe), tuple(family), k)


def write_hitting_set(hs: HittingSetInstance) -> str:
    lines = [f"k {hs.k}", " ".join(["u", *hs.universe])]
    lines.extend(" ".join(["s", *s]) for s in hs.family)
    return "\n".join(lines) + "\n"


def solve_hittingset_bf(hs: HittingSetInstance) -> bool:
    _check_limit(len(hs.universe), "|U|")
    sets = [frozenset(s) for s in hs.family]
    for size in range(min(hs.k, len(hs.universe)) + 1):
        for chosen in combinations(hs.universe, size):
            picked = set(chosen)
            if all(s & picked for s in sets):
                return True
    return False


# --- Multicolored Independent Set ---------------------------------------------------


@dataclass(frozen=True)
class MCISInstance:
    """k parts of n vertices each, every part a clique; edges are stored as vertex pairs."""

    parts: Tuple[Tuple[str, ...], ...]
    edges: FrozenSet[FrozenSet[str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        sizes = {len(p) for p in self.parts}
        if len(sizes) > 1:
            raise InstanceError(f"parts must share one size, got sizes {sorted(sizes)}")
        vertices = [v for p in self.parts for v in p]
        if len(set(vertices)) != len(vertices):
            raise InstanceError("a vertex belongs to two parts")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts[0]) if self.parts else 0

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(v for p in self.parts for v in p)

    def adjacent(self, u: str, v: str) -> bool:
        """Cross edges as given plus the implied clique edges inside each part."""
        if u == v:
            return False
        if frozenset((u, v)) in self.edges:
            return True
        return any(u in p and v in p for p in self.parts)


def parse_mcis(text: str) -> MCISInstance:
    k: Optional[int] = None
    parts: List[Tuple[str, ...]] = []
    edges = set()
    for number, tokens in content_lines(text):
        tag, rest = tokens[0], tokens[1:]
        if tag == "k":
            if len(rest) != 1:
                raise ParseError("expected 'k <int>'", number)
            k = parse_int(rest[0], number, "k")
        elif tag == "p":
            parts.append(tuple(rest))
        elif tag == "e":
            if len(rest) != 2 or rest[0] == rest[1]:
                raise ParseError("expected 'e <u> <v>' with two distinct vertices", number)
            edges.add(frozenset(rest))
        else:
            raise ParseError(f"unknown line tag {tag!r}", number)
    known = {v for p in parts for v in p}
    for edge in edges:
        unknown = edge - known
        if unknown:
            raise ParseError(f"edge mentions vertex {sorted(unknown)[0]!r} outside every part")
    if k is not None and k != len(parts):
        raise ParseError(f"k = {k} but {len(parts)} parts are listed")
    return MCISInstance(tuple(parts), frozenset(edges))


def write_mcis(g: MCISInstance) -> str:
    lines = [f"k {g.k}"]
    lines.extend(" ".join(["p", *p]) for p in g.parts)
    order = {v: i for i, v in enumerate(g.vertices)}
    for edge in sorted((tuple(sorted(e, key=order.get)) for e in g.edges), key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f"e {edge[0]} {edge[1]}")
    return "\n".join(lines) + "\n"


def solve_mcis_bf(g: MCISInstance) -> bool:
    _check_limit(g.n * g.k, "nk")
    for choice in product(*g.parts):
        if all(not g.adjacent(u, v) for u, v in combinations(choice, 2)):
            return True
    return False


# --- Γ4 CSP -------------------------------------------------------------------


@dataclass(frozen=True)
class Gamma4Constraint:
    relation: str  # "R": at most two ones, "B": at least three ones
    scope: Tuple[str, str, str, str]

    def holds(self, assignment: Dict[str, int]) -> bool:
        ones = sum(assignment[v] for v in self.scope)
        return ones <= 2 if self.relation == "R" else ones >= 3


@dataclass(frozen=True)
class Gamma4Instance:
    variables: Tuple[str, ...]
    constraints: Tuple[Gamma4Constraint, ...]

    @property
    def red_constraints(self) -> List[Gamma4Constraint]:
        return [c for c in self.constraints if c.relation == "R"]

    @property
    def blue_constraints(self) -> List[Gamma4Constraint]:
        return [c for c in self.constraints if c.relation == "B"]


def parse_gamma4(text: str) -> Gamma4Instance:
    variables: Dict[str, None] = {}
    constraints = []
    for number, tokens in content_lines(text):
        relation, scope = tokens[0], tokens[1:]
        if relation not in ("R", "B"):
            raise ParseError(f"expected relation 'R' or 'B', got {relation!r}", number)
        if len(scope) != 4:
            raise ParseError(f"Γ4 constraints have arity 4, got {len(scope)}", number)
        if len(set(scope)) != 4:
            raise ParseError("variables in a scope must be distinct", number)
        variables.update(dict.fromkeys(scope))
        constraints.append(Gamma4Constraint(relation, tuple(scope)))  # type: ignore[arg-type]
    return Gamma4Instance(tuple(variables), tuple(constraints))


def write_gamma4(csp: Gamma4Instance) -> str:
    return "".join(" ".join([c.relation, *c.scope]) + "\n" for c in csp.constraints)


def solve_gamma4_bf(csp: Gamma4Instance) -> bool:
    _check_limit(len(csp.variables), "variables")
    for values in product((0, 1), repeat=len(csp.variables)):
        assignment = dict(zip(csp.variables, values))
        if all(c.holds(assignment) for c in csp.constraints):
            return True
    return False


def read_source(path: Union[str, Path], parser):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return parser(text)

