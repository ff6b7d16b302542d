"""
HyperBall - PACE Tree Decomposition Files

    c comment
    s td <#bags> <width+1> <#vertices>
    b 1 1 4
    b 2 2 4
    1 2

Bag ids and vertices are 1-indexed; file vertex i is incidence vertex i − 1.

Licensed under the MIT License.
"""

from pathlib import Path
from typing import Dict, FrozenSet, Optional, Tuple, Union

import networkx as nx

from hyperball.core.exceptions import InvalidDecompositionError, ParseError
from hyperball.services.geometry.instance_format import parse_int


def read_pace_td(text: str) -> Tuple[int, nx.Graph]:
    """Returns (number of vertices, bag tree with 0-based node ids and `bag` attributes)."""
    header: Optional[Tuple[int, int, int]] = None
    bags: Dict[int, FrozenSet[int]] = {}
    tree = nx.Graph()

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "s":
            if len(tokens) != 5 or tokens[1] != "td":
                raise ParseError("expected 's td <#bags> <width+1> <#vertices>'", number)
            bag_count, bag_size, vertex_count = (parse_int(t, number) for t in tokens[2:])
            header = (bag_count, bag_size, vertex_count)
            continue
        if header is None:
            raise ParseError("solution line 's td ...' must come first", number)
        num_bags, _, num_vertices = header
        if tokens[0] == "b":
            if len(tokens) < 2:
                raise ParseError("bag line needs an id", number)
            bag_id = parse_int(tokens[1], number, "bag id")
            vertices = [parse_int(t, number, "vertex") for t in tokens[2:]]
            if not 1 <= bag_id <= num_bags:
                raise ParseError(f"bag id {bag_id} outside [1, {num_bags}]", number)
            if any(v < 1 or v > num_vertices for v in vertices):
                raise ParseError(f"vertex outside [1, {num_vertices}]", number)
            bags[bag_id - 1] = frozenset(v - 1 for v in vertices)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected a tree edge '<bag> <bag>', got {raw.strip()!r}", number)
        a, b = (parse_int(t, number, "bag id") for t in tokens)
        tree.add_edge(a - 1, b - 1)

    if header is None:
        raise ParseError("missing 's td' line")
    num_bags, _, num_vertices = header
    for bag_id in range(num_bags):
        tree.add_node(bag_id, bag=bags.get(bag_id, frozenset()))
    if tree.number_of_nodes() != num_bags:
        raise InvalidDecompositionError("tree edge mentions an undeclared bag")
    if num_bags and not nx.is_tree(tree):
        raise InvalidDecompositionError("bags do not form a tree")
    return num_vertices, tree


def write_pace_td(bag_tree: nx.Graph, num_vertices: int) -> str:
    ids = {node: index for index, node in enumerate(sorted(bag_tree.nodes), start=1)}
    width = max((len(bag) for _, bag in bag_tree.nodes(data="bag")), default=0)
    lines = [f"s td {len(ids)} {width} {num_vertices}"]
    for node, index in ids.items():
        vertices = sorted(v + 1 for v in bag_tree.nodes[node]["bag"])
        lines.append(" ".join(["b", str(index), *map(str, vertices)]))
    for u, v in sorted((min(ids[a], ids[b]), max(ids[a], ids[b])) for a, b in bag_tree.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_pace_td(path: Union[str, Path]) -> Tuple[int, nx.Graph]:
    path = Path(path)
    try:
        return read_pace_td(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
