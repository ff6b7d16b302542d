"""
HyperBall - Treewidth Dynamic Program

For a fixed center conciseness s and radius r, each node t of a nice tree
decomposition of the incidence graph gets a table of records

    (past, future, bag_center, bag_vectors)

past      selected coordinates already forgotten below t
future    selected coordinates not yet introduced anywhere below t
bag_center    the selected coordinates of the bag
bag_vectors   per bag vector, how many of its 1-coordinates are selected and forgotten

with past + future + |bag_center| = s. A record is kept iff some partial center
realizes it and every vector forgotten below t already sits on the right side of
the ball. Forgetting a vector is the moment its distance is fixed:
δ(v, c) = s + con(v) − 2·(bag_vectors[v] + |O(v) ∩ bag_center|).

Each entry remembers how it was produced, so the center is read off the
forget-coordinate decisions of one backtrace from the root.

Licensed under the MIT License.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from hyperball.core.config import settings
from hyperball.core.exceptions import VerificationError
from hyperball.services.geometry import (
    BitVector,
    Instance,
    Solution,
    degenerate_solution,
    is_degenerate,
    verify,
)
from hyperball.services.oracle import OptimalSolution
from hyperball.services.treewidth.decomposition import (
    NiceTreeDecomposition,
    NodeKind,
    check_decomposition,
    heuristic_tree_decomposition,
)
from hyperball.services.treewidth.incidence import IncidenceGraph, build_incidence_graph

logger = logging.getLogger(__name__)


class DPKey(NamedTuple):
    past: int
    future: int
    bag_center: Tuple[int, ...]
    bag_vectors: Tuple[int, ...]


class DPEntry(NamedTuple):
    kind: NodeKind
    children: Tuple[DPKey, ...] = ()
    selected: bool = False


Table = Dict[DPKey, DPEntry]


def _key_order(key: DPKey) -> Tuple:
    return (key.past, len(key.bag_center), key.bag_center, key.bag_vectors)


@dataclass
class _NodeInfo:
    kind: NodeKind
    children: List[int]
    coords: Tuple[int, ...]
    vectors: Tuple[int, ...]
    outside: int
    coordinate: Optional[int] = None
    vector: Optional[int] = None
    position: Optional[int] = None
    holders: Tuple[int, ...] = ()


@dataclass
class DPStats:
    runs: int = 0
    max_table_size: int = 0
    table_sizes: Dict[int, int] = field(default_factory=dict)


class TreewidthSolver:
    """Minimum-conciseness, then minimum-radius center via the record DP."""

    def __init__(
        self,
        inst: Instance,
        ntd: Optional[NiceTreeDecomposition] = None,
        check_bounds: Optional[bool] = None,
    ):
        self.inst = inst
        self.incidence: IncidenceGraph = build_incidence_graph(inst)
        if ntd is None:
            ntd = heuristic_tree_decomposition(self.incidence.graph)
        else:
            check_decomposition(self.incidence.graph, ntd)
        self.ntd = ntd
        self.check_bounds = settings.dp_check_table_bounds if check_bounds is None else check_bounds
        self.stats = DPStats()
        self._supports = [frozenset(v.support) for v in inst.vectors]
        self._order = ntd.postorder()
        self._info = self._prepare()

    @property
    def width(self) -> int:
        return self.ntd.width

    def _prepare(self) -> Dict[int, _NodeInfo]:
        g = self.incidence
        info: Dict[int, _NodeInfo] = {}
        forgotten: Dict[int, int] = {}
        for node_id in self._order:
            node = self.ntd.nodes[node_id]
            coords = tuple(sorted(g.coordinate(v) for v in node.bag if not g.is_vector(v)))
            vectors = tuple(sorted(v for v in node.bag if g.is_vector(v)))
            below = sum(forgotten[c] for c in node.children)
            item = _NodeInfo(node.kind, list(node.children), coords, vectors, 0)

            if node.kind in (NodeKind.INTRODUCE, NodeKind.FORGET):
                child_vectors = info[node.children[0]].vectors
                if g.is_vector(node.vertex):
                    item.vector = node.vertex
                    reference = vectors if node.kind is NodeKind.INTRODUCE else child_vectors
                    item.position = reference.index(node.vertex)
                else:
                    item.coordinate = g.coordinate(node.vertex)
                    if node.kind is NodeKind.FORGET:
                        below += 1
                        item.holders = tuple(
                            k for k, v in enumerate(child_vectors) if item.coordinate in self._supports[v]
                        )
            forgotten[node_id] = below
            item.outside = self.inst.dim - below - len(coords)
            info[node_id] = item
        return info

    def _table_bound(self, s: int, node_id: int) -> int:
        bag = len(self.ntd.nodes[node_id].bag)
        return (s + 1) * 2 ** bag * (min(s, self.inst.icon) + 1) ** bag

    def _node_table(self, node_id: int, tables: Dict[int, Table], s: int, r: int) -> Table:
        item = self._info[node_id]
        table: Table = {}
        kind = item.kind

        if kind is NodeKind.LEAF:
            if s <= item.outside:
                table[DPKey(0, s, (), ())] = DPEntry(kind)
            return table

        if kind is NodeKind.JOIN:
            left, right = (tables[c] for c in item.children)
            by_center: Dict[Tuple[int, ...], List[DPKey]] = {}
            for key in right:
                by_center.setdefault(key.bag_center, []).append(key)
            for k1 in left:
                for k2 in by_center.get(k1.bag_center, ()):
                    future = k1.future - k2.past
                    if future < 0 or future != k2.future - k1.past or future > item.outside:
                        continue
                    alpha = tuple(a + b for a, b in zip(k1.bag_vectors, k2.bag_vectors))
                    key = DPKey(k1.past + k2.past, future, k1.bag_center, alpha)
                    if key not in table:
                        table[key] = DPEntry(kind, (k1, k2))
            return table

        child_table = tables[item.children[0]]

        if kind is NodeKind.INTRODUCE and item.vector is not None:
            for key in child_table:
                alpha = key.bag_vectors[: item.position] + (0,) + key.bag_vectors[item.position:]
                table[DPKey(key.past, key.future, key.bag_center, alpha)] = DPEntry(kind, (key,))
            return table

        if kind is NodeKind.INTRODUCE:
            c = item.coordinate
            for key in child_table:
                if key.future <= item.outside:
                    table.setdefault(key, DPEntry(kind, (key,), False))
                if key.future >= 1:
                    center = list(key.bag_center)
                    center.insert(bisect_left(center, c), c)
                    chosen = DPKey(key.past, key.future - 1, tuple(center), key.bag_vectors)
                    table.setdefault(chosen, DPEntry(kind, (key,), True))
            return table

        if item.vector is not None:
            v = item.vector
            support = self._supports[v]
            con = len(support)
            blue = self.incidence.is_blue(v)
            for key in child_table:
                shared = key.bag_vectors[item.position] + sum(1 for c in key.bag_center if c in support)
                distance = s + con - 2 * shared
                if (blue and distance > r) or (not blue and distance <= r):
                    continue
                alpha = key.bag_vectors[: item.position] + key.bag_vectors[item.position + 1:]
                table.setdefault(DPKey(key.past, key.future, key.bag_center, alpha), DPEntry(kind, (key,)))
            return table

        c = item.coordinate
        for key in child_table:
            if c in key.bag_center:
                center = tuple(x for x in key.bag_center if x != c)
                alpha = list(key.bag_vectors)
                for k in item.holders:
                    alpha[k] += 1
                table.setdefault(DPKey(key.past + 1, key.future, center, tuple(alpha)), DPEntry(kind, (key,), True))
            else:
                table.setdefault(key, DPEntry(kind, (key,), False))
        return table

    def run(self, s: int, r: int) -> Optional[BitVector]:
        """One DP pass; the materialized center when the root record (s, 0, ∅, ∅) is reachable."""
        self.stats.runs += 1
        self.stats.table_sizes = {}
        tables: Dict[int, Table] = {}
        for node_id in self._order:
            table = self._node_table(node_id, tables, s, r)
            if not table:
                return None
            table = dict(sorted(table.items(), key=lambda kv: _key_order(kv[0])))
            size = len(table)
            self.stats.table_sizes[node_id] = size
            self.stats.max_table_size = max(self.stats.max_table_size, size)
            if self.check_bounds and size > self._table_bound(s, node_id):
                raise VerificationError(
                    f"node {node_id}: {size} records exceed the bound {self._table_bound(s, node_id)}"
                )
            tables[node_id] = table

        root_key = DPKey(s, 0, (), ())
        if root_key not in tables[self.ntd.root]:
            return None
        return self._materialize(tables, root_key)

    def _materialize(self, tables: Dict[int, Table], root_key: DPKey) -> BitVector:
        selected: List[int] = []
        stack = [(self.ntd.root, root_key)]
        while stack:
            node_id, key = stack.pop()
            entry = tables[node_id][key]
            item = self._info[node_id]
            if entry.kind is NodeKind.FORGET and item.coordinate is not None and entry.selected:
                selected.append(item.coordinate)
            stack.extend(zip(item.children, entry.children))
        return BitVector.from_coordinates(self.inst.dim, selected)

    def radius_range(self, s: int) -> range:
        """Radii that can possibly work for a center with s ones (triangle bounds on δ)."""
        low = max(abs(b.conciseness - s) for b in self.inst.blues)
        high = min(min(red.conciseness + s for red in self.inst.reds) - 1, self.inst.dim)
        return range(low, high + 1)

    def solve(self) -> Optional[OptimalSolution]:
        if is_degenerate(self.inst):
            solution = degenerate_solution(self.inst)
            return OptimalSolution(solution) if solution is not None else None

        logger.info(f"🔍 treewidth DP on a decomposition of width {self.width}")
        for s in range(self.inst.dim + 1):
            for r in self.radius_range(s):
                center = self.run(s, r)
                if center is None:
                    continue
                if center.conciseness != s or not verify(self.inst, center, r):
                    raise VerificationError(
                        f"materialized center {list(center.support)} fails for conciseness {s}, radius {r}"
                    )
                logger.info(f"✅ conciseness {s}, radius {r} after {self.stats.runs} DP runs")
                return OptimalSolution(Solution(center, r))
        logger.info(f"📊 no center after {self.stats.runs} DP runs")
        return None


def solve_treewidth(inst: Instance, ntd: Optional[NiceTreeDecomposition] = None) -> Optional[OptimalSolution]:
    return TreewidthSolver(inst, ntd).solve()
