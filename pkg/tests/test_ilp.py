"""
Tests for the column-type integer model and its feasibility search.
"""

import random

import pytest

from hyperball.services.generators import gen_random
from hyperball.services.geometry import BitVector, Instance, hamming, verify
from hyperball.services.ilp import build_ilp, column_types, dual_fix, dump_ilp, find_feasible, solve_ilp
from hyperball.services.oracle import brute_force_solve


def bv(bits: str) -> BitVector:
    return BitVector.from_bits(bits)


class TestColumnModel:
    """Column types and constraint rows on the three-dimensional example."""

    def setup_method(self):
        self.inst = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    def test_column_types(self):
        """Every coordinate of the example has its own column signature."""
        types = column_types(self.inst)
        assert [t.coords for t in types] == [(1,), (2,), (3,)]
        assert [t.signature for t in types] == [(1, 1, 0), (1, 0, 0), (0, 1, 0)]

    def test_identical_columns_merge(self):
        """Coordinates with equal columns share a type whose bound is their count."""
        inst = Instance(4, reds=(bv("0000"),), blues=(bv("1101"),))
        model = build_ilp(inst)
        assert [t.coords for t in model.types] == [(1, 2, 4), (3,)]
        assert model.upper_bounds == (3, 1)

    def test_constraints(self):
        """One row per (blue, red) pair: 2(s_r − s_b) coefficients, Σ(s_r − s_b)·n − 1 on the right."""
        model = build_ilp(self.inst)
        rows = [(c.coefficients, c.rhs) for c in model.constraints]
        assert rows == [((-2, -2, 0), -3), ((-2, 0, -2), -3)]

    def test_degenerate_rejected(self):
        """No model is built without both colors."""
        with pytest.raises(ValueError):
            build_ilp(Instance(2, blues=(bv("10"),)))

    def test_dump(self):
        """The dump lists bounds then constraints."""
        text = dump_ilp(build_ilp(self.inst))
        lines = text.splitlines()
        assert lines[0].startswith("# column-type ILP: 3 variables, 2 constraints")
        assert "0 <= x1 <= 1  # coords 1" in lines
        assert "c1: -2 x1 -2 x2 <= -3  # blue 1 / red 1" in lines
        assert lines.index("bounds") < lines.index("constraints")

    def test_column_exchangeability(self):
        """Moving a one between two coordinates of one column type keeps every distance."""
        checked = 0
        for seed in range(50):
            inst = gen_random(8, 3, 3, 4, seed=seed)
            rng = random.Random(seed)
            for column_type in column_types(inst):
                if column_type.count < 2:
                    continue
                a, b = rng.sample(column_type.coords, 2)
                rest = [i for i in range(1, inst.dim + 1) if i not in (a, b) and rng.random() < 0.5]
                first = BitVector.from_coordinates(inst.dim, rest + [a])
                second = BitVector.from_coordinates(inst.dim, rest + [b])
                profile = [hamming(v, first) for v in inst.vectors]
                assert profile == [hamming(v, second) for v in inst.vectors], f"seed {seed}, type {column_type.coords}"
                checked += 1
        assert checked > 0, "Some random instance should have a repeated column"


class TestFeasibility:
    """dual_fix and the DFS."""

    def test_dual_fix(self):
        """Non-negative columns go to 0, non-positive columns to their bound, mixed stay free."""
        fixed = dual_fix([[1, 0], [-2, 0], [1, -1], [0, 0]], [5, 4, 3, 2])
        assert fixed == {0: 0, 1: 4, 3: 0}

    def test_find_feasible_with_and_without_presolve(self):
        """Both modes find an assignment satisfying every row."""
        coefficients = [[1, -1], [-1, 2]]
        rhs = [0, 1]
        for presolve in (True, False):
            assignment = find_feasible(coefficients, rhs, [3, 3], presolve=presolve)
            assert assignment is not None, f"presolve={presolve} should find x"
            for row, b in zip(coefficients, rhs):
                assert sum(a * x for a, x in zip(row, assignment)) <= b

    def test_infeasible(self):
        """x ≥ 3 with x ≤ 2 has no solution."""
        assert find_feasible([[-1]], [-3], [2]) is None
        assert find_feasible([[-1]], [-3], [2], presolve=False) is None


class TestSolveIlp:
    """solve_ilp against the exhaustive solver."""

    def test_inst_a(self):
        """Dual fixing sets every type to its bound: center 111, radius 1."""
        solution = solve_ilp(Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101"))))
        assert solution.center == bv("111")
        assert solution.radius == 1

    def test_parity(self):
        """The XOR square is infeasible."""
        inst = Instance(2, reds=(bv("10"), bv("01")), blues=(bv("11"), bv("00")))
        assert solve_ilp(inst) is None
        assert solve_ilp(inst, presolve=False) is None

    def test_degenerate(self):
        """Instances with one color short-circuit."""
        assert solve_ilp(Instance(2, blues=(bv("10"),))).radius == 2

    @pytest.mark.parametrize("seed", range(12))
    def test_agrees_with_brute_force(self, seed):
        """YES/NO matches brute force and every witness verifies."""
        inst = gen_random(7, 4, 4, 4, seed=seed)
        expected = brute_force_solve(inst)
        for presolve in (True, False):
            solution = solve_ilp(inst, presolve=presolve)
            assert (solution is None) == (expected is None), f"seed {seed}, presolve={presolve}"
            if solution is not None:
                assert verify(inst, solution.center, solution.radius)
