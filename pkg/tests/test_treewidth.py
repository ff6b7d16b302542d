"""
Tests for incidence graphs, nice tree decompositions, PACE files and the
record DP.
"""

import time

import networkx as nx
import pytest

from hyperball.core.exceptions import InvalidDecompositionError, ParseError, SolverLimitError
from hyperball.services.generators import gen_path_instance, gen_random
from hyperball.services.geometry import BitVector, Instance, verify
from hyperball.services.ilp import solve_ilp
from hyperball.services.oracle import brute_force_solve
from hyperball.services.treewidth import (
    NodeKind,
    TreewidthSolver,
    bag_width,
    build_incidence_graph,
    decomposition_errors,
    heuristic_tree_decomposition,
    load_pace_td,
    min_fill_decomposition,
    nicify,
    read_pace_td,
    solve_treewidth,
    validate_decomposition,
    write_pace_td,
)
from tests.corpus import seeded_instance


def bv(bits: str) -> BitVector:
    return BitVector.from_bits(bits)


def inst_a() -> Instance:
    return Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))


# Hand-made decomposition of inst_a's incidence graph (vectors 1-3, coordinates 4-6)
INST_A_TD = """c four bags on a path
s td 4 3 6
b 1 1 4 5
b 2 1 2 4
b 3 2 6
b 4 3
1 2
2 3
3 4
"""


class TestIncidenceGraph:
    """Vertex numbering and edges."""

    def test_layout(self):
        """Blues, then reds, then coordinates 1..d."""
        incidence = build_incidence_graph(inst_a())
        graph = incidence.graph
        assert graph.number_of_nodes() == 6
        assert sorted(graph.edges) == [(0, 3), (0, 4), (1, 3), (1, 5)]
        assert incidence.is_blue(1) and not incidence.is_blue(2)
        assert incidence.coordinate(5) == 3
        assert incidence.coordinate(2) is None
        assert incidence.coordinate_vertex(1) == 3


class TestDecomposition:
    """Min-fill bag trees and nicification."""

    @pytest.mark.parametrize("seed", range(6))
    def test_heuristic_decomposition_is_valid(self, seed):
        """Every rule of a nice decomposition holds on random incidence graphs."""
        graph = build_incidence_graph(gen_random(9, 5, 5, 4, seed=seed)).graph
        ntd = heuristic_tree_decomposition(graph)
        assert decomposition_errors(graph, ntd) == [], f"seed {seed}"
        assert ntd.nodes[ntd.root].bag == frozenset()

    def test_node_kinds(self):
        """Leaves are empty; every other node is introduce, forget or join."""
        graph = build_incidence_graph(inst_a()).graph
        ntd = heuristic_tree_decomposition(graph)
        kinds = {node.kind for node in ntd.nodes.values()}
        assert NodeKind.LEAF in kinds and NodeKind.FORGET in kinds
        for node in ntd.nodes.values():
            if node.kind is NodeKind.LEAF:
                assert not node.bag and not node.children

    def test_postorder_children_first(self):
        """postorder lists every child before its parent."""
        ntd = heuristic_tree_decomposition(build_incidence_graph(inst_a()).graph)
        order = ntd.postorder()
        position = {node_id: i for i, node_id in enumerate(order)}
        assert order[-1] == ntd.root
        for node in ntd.nodes.values():
            for child in node.children:
                assert position[child] < position[node.id]

    def test_empty_graph(self):
        """An empty graph still gets a one-bag decomposition."""
        tree = min_fill_decomposition(nx.Graph())
        assert tree.number_of_nodes() == 1
        assert validate_decomposition(nx.Graph(), nicify(tree))

    def test_missing_edge_detected(self):
        """A bag tree that misses an edge is reported."""
        graph = nx.Graph([(0, 1), (1, 2)])
        tree = nx.Graph()
        tree.add_node(0, bag=frozenset({0, 1}))
        tree.add_node(1, bag=frozenset({2}))
        tree.add_edge(0, 1)
        errors = decomposition_errors(graph, nicify(tree))
        assert any("edge (1, 2)" in e for e in errors)


class TestPaceFormat:
    """Reading and writing PACE .td files."""

    def test_read_example(self):
        """Bags and vertices become 0-based."""
        num_vertices, tree = read_pace_td(INST_A_TD)
        assert num_vertices == 6
        assert tree.nodes[0]["bag"] == frozenset({0, 3, 4})
        assert nx.is_tree(tree)
        graph = build_incidence_graph(inst_a()).graph
        assert validate_decomposition(graph, nicify(tree))

    def test_write_then_read(self, tmp_path):
        """A written min-fill decomposition loads back into a valid nice decomposition."""
        graph = build_incidence_graph(inst_a()).graph
        text = write_pace_td(min_fill_decomposition(graph), graph.number_of_nodes())
        assert text.startswith("s td ")
        path = tmp_path / "a.td"
        path.write_text(text, encoding="utf-8")
        num_vertices, tree = load_pace_td(path)
        assert num_vertices == 6
        assert validate_decomposition(graph, nicify(tree))

    @pytest.mark.parametrize(
        "text",
        [
            "b 1 1\n",
            "s td 1 1\n",
            "s td 1 1 2\nb 2 1\n",
            "s td 1 1 2\nb 1 3\n",
            "s td 2 1 2\nb 1 1\nb 2 2\n1 2 3\n",
        ],
    )
    def test_parse_errors(self, text):
        """Malformed lines raise ParseError."""
        with pytest.raises(ParseError):
            read_pace_td(text)

    def test_cycle_rejected(self):
        """Bags joined in a cycle are not a tree."""
        text = "s td 3 1 1\nb 1 1\nb 2 1\nb 3 1\n1 2\n2 3\n3 1\n"
        with pytest.raises(InvalidDecompositionError):
            read_pace_td(text)

    def test_missing_file(self, tmp_path):
        """Unreadable files surface as ParseError."""
        with pytest.raises(ParseError):
            load_pace_td(tmp_path / "none.td")


class TestTreewidthDP:
    """TreewidthSolver against brute force."""

    def test_inst_a_with_given_decomposition(self):
        """A user-supplied decomposition is checked and used."""
        _, tree = read_pace_td(INST_A_TD)
        solver = TreewidthSolver(inst_a(), nicify(tree))
        result = solver.solve()
        assert result.center == bv("111")
        assert result.radius == 1
        assert solver.width == 2

    def test_invalid_decomposition_rejected(self):
        """Dropping vertex 5 from the first bag leaves an edge uncovered."""
        _, tree = read_pace_td(INST_A_TD.replace("b 1 1 4 5", "b 1 1 4"))
        with pytest.raises(InvalidDecompositionError):
            TreewidthSolver(inst_a(), nicify(tree))

    def test_parity(self):
        """No center exists for the XOR square."""
        inst = Instance(2, reds=(bv("10"), bv("01")), blues=(bv("11"), bv("00")))
        assert solve_treewidth(inst) is None

    def test_radius_range(self):
        """Triangle bounds around the center conciseness."""
        solver = TreewidthSolver(inst_a())
        assert list(solver.radius_range(3)) == [1, 2]
        assert list(solver.radius_range(0)) == []

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(100))
    def test_matches_brute_force_optimum(self, seed):
        """Same minimum conciseness and same minimum radius as brute force, with table bounds enforced."""
        inst = seeded_instance(seed, max_dim=10)
        expected = brute_force_solve(inst)
        solver = TreewidthSolver(inst, check_bounds=True)
        result = solver.solve()
        assert (result is None) == (expected is None), f"seed {seed}"
        if result is not None:
            assert result.conciseness == expected.conciseness
            assert result.radius == expected.radius
            assert verify(inst, result.center, result.radius)

    def test_table_sizes_recorded(self):
        """Stats track every DP run and the largest table."""
        solver = TreewidthSolver(gen_random(6, 3, 3, 2, seed=3), check_bounds=True)
        solver.solve()
        assert solver.stats.runs >= 1
        assert solver.stats.max_table_size >= 1

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(20))
    def test_beyond_brute_force(self, seed):
        """Path-structured instances with d = 40 stay narrow and are solved well within a minute."""
        inst = gen_path_instance(40, 4, 4, window=3, seed=seed)
        assert bag_width(min_fill_decomposition(build_incidence_graph(inst).graph)) <= 5
        with pytest.raises(SolverLimitError):
            brute_force_solve(inst)

        started = time.perf_counter()
        solver = TreewidthSolver(inst)
        result = solver.solve()
        elapsed = time.perf_counter() - started
        assert solver.width <= 5
        assert elapsed < 60, f"seed {seed} took {elapsed:.1f}s"

        reference = solve_ilp(inst)
        assert (result is None) == (reference is None), f"seed {seed}"
        if result is not None:
            assert verify(inst, result.center, result.radius)
