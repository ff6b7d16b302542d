"""Subset branching and the conciseness-bounded search tree."""

from hyperball.services.branching.search_tree import ConcisenessSearchTree, solve_scp_icon
from hyperball.services.branching.subsets import solve_icon_blue, solve_icon_red

__all__ = ["ConcisenessSearchTree", "solve_icon_blue", "solve_icon_red", "solve_scp_icon"]
