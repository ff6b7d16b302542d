"""Incidence graphs, nice tree decompositions and the record DP over them."""

from hyperball.services.treewidth.decomposition import (
    NiceNode,
    NiceTreeDecomposition,
    NodeKind,
    bag_width,
    check_decomposition,
    decomposition_errors,
    heuristic_tree_decomposition,
    min_fill_decomposition,
    nicify,
    validate_decomposition,
)
from hyperball.services.treewidth.dp import DPEntry, DPKey, DPStats, TreewidthSolver, solve_treewidth
from hyperball.services.treewidth.incidence import IncidenceGraph, build_incidence_graph
from hyperball.services.treewidth.pace_format import load_pace_td, read_pace_td, write_pace_td

__all__ = [
    "DPEntry",
    "DPKey",
    "DPStats",
    "IncidenceGraph",
    "NiceNode",
    "NiceTreeDecomposition",
    "NodeKind",
    "TreewidthSolver",
    "bag_width",
    "build_incidence_graph",
    "check_decomposition",
    "decomposition_errors",
    "heuristic_tree_decomposition",
    "load_pace_td",
    "min_fill_decomposition",
    "nicify",
    "read_pace_td",
    "solve_treewidth",
    "validate_decomposition",
    "write_pace_td",
]
