"""
HyperBall - Tree Decompositions

Min-fill elimination (networkx) gives a bag tree; nicification turns any bag
tree into a nice decomposition with empty leaves and an empty root, where each
internal node introduces one vertex, forgets one vertex, or joins two children
with identical bags.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from hyperball.core.exceptions import InvalidDecompositionError

logger = logging.getLogger(__name__)


class NodeKind(str, Enum):
    LEAF = "leaf"
    INTRODUCE = "introduce"
    FORGET = "forget"
    JOIN = "join"


@dataclass
class NiceNode:
    id: int
    kind: NodeKind
    bag: FrozenSet[int]
    vertex: Optional[int] = None
    children: List[int] = field(default_factory=list)


@dataclass
class NiceTreeDecomposition:
    nodes: Dict[int, NiceNode] = field(default_factory=dict)
    root: int = 0

    @property
    def width(self) -> int:
        return max((len(node.bag) for node in self.nodes.values()), default=0) - 1

    def add(self, kind: NodeKind, bag: Iterable[int], vertex: Optional[int] = None, children=()) -> int:
        node_id = len(self.nodes)
        self.nodes[node_id] = NiceNode(node_id, kind, frozenset(bag), vertex, list(children))
        return node_id

    def postorder(self) -> List[int]:
        """Children before parents, iteratively."""
        order: List[int] = []
        stack = [self.root]
        while stack:
            node_id = stack.pop()
            order.append(node_id)
            stack.extend(self.nodes[node_id].children)
        order.reverse()
        return order


def bag_width(bag_tree: nx.Graph) -> int:
    return max((len(bag) for _, bag in bag_tree.nodes(data="bag")), default=0) - 1


def min_fill_decomposition(graph: nx.Graph) -> nx.Graph:
    """Bag tree with integer nodes and a frozenset `bag` attribute per node."""
    if graph.number_of_nodes() == 0:
        tree = nx.Graph()
        tree.add_node(0, bag=frozenset())
        return tree
    width, decomposition = treewidth_min_fill_in(graph)
    logger.debug(f"📊 min-fill decomposition: {decomposition.number_of_nodes()} bags, width {width}")
    return nx.convert_node_labels_to_integers(decomposition, label_attribute="bag")


def _chain(ntd: NiceTreeDecomposition, start: int, current: FrozenSet[int], target: FrozenSet[int]) -> int:
    """Forget current \\ target, then introduce target \\ current, in ascending vertex order."""
    node_id = start
    bag = set(current)
    for vertex in sorted(current - target):
        bag.discard(vertex)
        node_id = ntd.add(NodeKind.FORGET, bag, vertex, [node_id])
    for vertex in sorted(target - current):
        bag.add(vertex)
        node_id = ntd.add(NodeKind.INTRODUCE, bag, vertex, [node_id])
    return node_id


def nicify(bag_tree: nx.Graph, root: Optional[int] = None) -> NiceTreeDecomposition:
    """
    Root the bag tree (at its smallest node id unless given), connect every
    child to its parent's bag by a forget/introduce chain, join siblings
    left-deep and forget the root bag down to an empty root.
    """
    ntd = NiceTreeDecomposition()
    if bag_tree.number_of_nodes() == 0:
        ntd.root = ntd.add(NodeKind.LEAF, ())
        return ntd

    if root is None:
        root = min(bag_tree.nodes)
    bags = {node: frozenset(bag) for node, bag in bag_tree.nodes(data="bag")}
    parent_of = nx.dfs_predecessors(bag_tree, source=root)
    children_of: Dict[int, List[int]] = {node: [] for node in bag_tree.nodes}
    for child, parent in parent_of.items():
        children_of[parent].append(child)

    built: Dict[int, int] = {}
    for node in nx.dfs_postorder_nodes(bag_tree, source=root):
        target = bags[node]
        branches = []
        for child in sorted(children_of[node]):
            branches.append(_chain(ntd, built[child], bags[child], target))
        if not branches:
            leaf = ntd.add(NodeKind.LEAF, ())
            branches.append(_chain(ntd, leaf, frozenset(), target))
        current = branches[0]
        for other in branches[1:]:
            current = ntd.add(NodeKind.JOIN, target, None, [current, other])
        built[node] = current

    ntd.root = _chain(ntd, built[root], bags[root], frozenset())
    return ntd


def heuristic_tree_decomposition(graph: nx.Graph) -> NiceTreeDecomposition:
    return nicify(min_fill_decomposition(graph))


def decomposition_errors(graph: nx.Graph, ntd: NiceTreeDecomposition) -> List[str]:
    """Every broken rule, as readable messages; empty for a valid nice decomposition."""
    errors: List[str] = []
    nodes = ntd.nodes
    if ntd.root not in nodes:
        return [f"root {ntd.root} is not a node"]

    parent: Dict[int, Optional[int]] = {ntd.root: None}
    stack = [ntd.root]
    while stack:
        node_id = stack.pop()
        for child in nodes[node_id].children:
            if child not in nodes:
                errors.append(f"node {node_id} has unknown child {child}")
                continue
            if child in parent:
                errors.append(f"node {child} is reached twice")
                continue
            parent[child] = node_id
            stack.append(child)
    if errors:
        return errors
    if len(parent) != len(nodes):
        errors.append(f"{len(nodes) - len(parent)} nodes unreachable from the root")

    if nodes[ntd.root].bag:
        errors.append("root bag is not empty")

    known = set(graph.nodes)
    for node_id in parent:
        node = nodes[node_id]
        child_bags = [nodes[c].bag for c in node.children]
        if not node.bag <= known:
            errors.append(f"node {node_id} holds vertices outside the graph")
        if node.kind is NodeKind.LEAF:
            if child_bags or node.bag:
                errors.append(f"leaf {node_id} must be childless with an empty bag")
        elif node.kind is NodeKind.INTRODUCE:
            if len(child_bags) != 1 or node.vertex in child_bags[0] or node.bag != child_bags[0] | {node.vertex}:
                errors.append(f"introduce node {node_id} does not add exactly vertex {node.vertex}")
        elif node.kind is NodeKind.FORGET:
            if len(child_bags) != 1 or node.vertex not in child_bags[0] or node.bag != child_bags[0] - {node.vertex}:
                errors.append(f"forget node {node_id} does not remove exactly vertex {node.vertex}")
        elif node.kind is NodeKind.JOIN:
            if len(child_bags) != 2 or any(bag != node.bag for bag in child_bags):
                errors.append(f"join node {node_id} needs two children with equal bags")

    for u, v in graph.edges:
        if not any(u in node.bag and v in node.bag for node in nodes.values()):
            errors.append(f"edge ({u}, {v}) is not covered by any bag")

    for vertex in graph.nodes:
        tops = [n for n in parent if vertex in nodes[n].bag and (parent[n] is None or vertex not in nodes[parent[n]].bag)]
        if len(tops) != 1:
            what = "appears in no bag" if not tops else "occurs in a disconnected set of bags"
            errors.append(f"vertex {vertex} {what}")
    return errors


def validate_decomposition(graph: nx.Graph, ntd: NiceTreeDecomposition) -> bool:
    return not decomposition_errors(graph, ntd)


def check_decomposition(graph: nx.Graph, ntd: NiceTreeDecomposition) -> None:
    errors = decomposition_errors(graph, ntd)
    if errors:
        raise InvalidDecompositionError("; ".join(errors[:5]))
