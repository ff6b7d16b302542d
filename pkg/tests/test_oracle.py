"""
Tests for the exhaustive reference solvers.
"""

import pytest

from hyperball.core.exceptions import SolverLimitError
from hyperball.services.geometry import BitVector, Instance, verify
from hyperball.services.oracle import brute_force_solve, solve_bounded_conciseness


def bv(bits: str) -> BitVector:
    return BitVector.from_bits(bits)


class TestBruteForce:
    """brute_force_solve on small hand-checked instances."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))
        self.parity = Instance(2, reds=(bv("10"), bv("01")), blues=(bv("11"), bv("00")))

    def test_inst_a_needs_full_center(self):
        """Only 111 separates: two blues at distance 1, the red at 3."""
        result = brute_force_solve(self.inst_a)
        assert result is not None, "The instance is separable"
        assert result.center == bv("111")
        assert result.radius == 1
        assert result.conciseness == 3

    def test_parity_is_no(self):
        """XOR labels on {0,1}^2 cannot be cut by a Hamming ball."""
        assert brute_force_solve(self.parity) is None

    def test_smallest_level_wins(self):
        """A conciseness-1 center beats every larger one."""
        inst = Instance(2, reds=(bv("01"),), blues=(bv("10"),))
        result = brute_force_solve(inst)
        assert result.center == bv("10")
        assert result.radius == 0

    def test_min_radius_within_level(self):
        """Inside the winning level, the smallest canonical radius is reported."""
        inst = Instance(3, reds=(bv("001"),), blues=(bv("100"), bv("010")))
        result = brute_force_solve(inst)
        assert result.conciseness == 2
        assert result.center == bv("110")
        assert result.radius == 1
        assert verify(inst, result.center, result.radius)

    def test_no_reds(self):
        """Degenerate instances bypass enumeration."""
        result = brute_force_solve(Instance(4, blues=(bv("1111"),)))
        assert result.center == BitVector.zeros(4)
        assert result.radius == 4

    def test_refuses_large_dimension(self):
        """Dimensions above the limit raise SolverLimitError."""
        inst = Instance(5, reds=(BitVector.zeros(5),), blues=(BitVector.ones(5),))
        with pytest.raises(SolverLimitError):
            brute_force_solve(inst, limit=4)


class TestBoundedConciseness:
    """solve_bounded_conciseness restricts the scan to small centers."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    def test_budget_below_optimum(self):
        """Inst A needs conciseness 3, so a budget of 2 answers no."""
        assert solve_bounded_conciseness(self.inst_a, 2) is None

    def test_budget_at_optimum(self):
        """A budget equal to the optimum finds it."""
        solution = solve_bounded_conciseness(self.inst_a, 3)
        assert solution.center == bv("111")

    def test_budget_above_dimension_is_clamped(self):
        """scp > d behaves like scp = d."""
        assert solve_bounded_conciseness(self.inst_a, 10) == solve_bounded_conciseness(self.inst_a, 3)

    def test_negative_budget(self):
        """Negative budgets are rejected."""
        with pytest.raises(ValueError):
            solve_bounded_conciseness(self.inst_a, -1)

    def test_no_blues_with_zero_budget(self):
        """A degenerate center above the budget does not count."""
        inst = Instance(2, reds=(bv("00"),))
        assert solve_bounded_conciseness(inst, 0) is None
        assert solve_bounded_conciseness(inst, 1).center == bv("10")
