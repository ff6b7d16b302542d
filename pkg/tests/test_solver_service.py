"""
Tests for the unified solver service: dispatch, request checks, re-verification
and report packaging.
"""

from unittest.mock import patch

import pytest

from hyperball.core.exceptions import VerificationError
from hyperball.services.geometry import BitVector, Instance, Solution
from hyperball.services.solver_service import (
    ALGORITHMS,
    RUNNERS,
    SolveOptions,
    choose_algorithm,
    reverify,
    run_algorithm,
)


def bv(bits: str) -> BitVector:
    return BitVector.from_bits(bits)


class TestDispatch:
    """auto picks a solver in a fixed order."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    def test_order(self):
        """scp first, then icon ≤ 3, then small d, then treewidth."""
        assert self.inst_a.icon <= 3
        assert choose_algorithm(self.inst_a, scp=1) == "branch-scp", "a budget outranks the icon ≤ 3 rule"
        assert choose_algorithm(self.inst_a) == "csp3"
        small = Instance(4, reds=(bv("0000"),), blues=(bv("1111"),))
        assert choose_algorithm(small) == "brute"
        wide = Instance(17, reds=(BitVector.zeros(17),), blues=(BitVector(17, (1, 2, 3, 4)),))
        assert choose_algorithm(wide) == "treewidth"

    def test_every_named_algorithm_runs(self):
        """Every algorithm name except the budgeted ones works without options."""
        for algo in ALGORITHMS:
            if algo in ("bounded", "branch-scp"):
                continue
            outcome = run_algorithm(self.inst_a, algo)
            assert outcome.status == "yes", f"{algo} should find a center"

    def test_auto_reports_chosen_algorithm(self):
        """The report names the solver that actually ran."""
        assert run_algorithm(self.inst_a, "auto").algo == "csp3"


class TestRequests:
    """Invalid requests are ValueErrors."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    @pytest.mark.parametrize(
        "algo, scp",
        [("bounded", None), ("branch-scp", None), ("ilp", 2), ("csp3", 1), ("real-lp", 1), ("bounded", -1), ("simplex", None)],
    )
    def test_rejected(self, algo, scp):
        """Missing budgets, unsupported budgets, negative budgets and unknown names."""
        with pytest.raises(ValueError):
            run_algorithm(self.inst_a, algo, SolveOptions(scp=scp))

    def test_budget_filters_min_conciseness_answer(self):
        """brute with scp 2 reports no because the optimum needs 3 ones."""
        outcome = run_algorithm(self.inst_a, "brute", SolveOptions(scp=2))
        assert outcome.status == "no"
        assert outcome.scp == 2
        assert run_algorithm(self.inst_a, "treewidth", SolveOptions(scp=3)).status == "yes"


class TestOutcome:
    """Extras and the JSON report."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    def test_report_fields(self):
        """A YES report carries the support, radius and conciseness."""
        report = run_algorithm(self.inst_a, "brute").to_report()
        assert report.status == "yes"
        assert report.center == [1, 2, 3]
        assert report.radius == 1
        assert report.conciseness == 3
        assert report.time_ms >= 0

    def test_branch_scp_counts_nodes(self):
        """branch-scp reports the nodes it expanded."""
        outcome = run_algorithm(self.inst_a, "branch-scp", SolveOptions(scp=3, deduplicate=True))
        assert outcome.nodes_expanded is not None and outcome.nodes_expanded >= 1

    def test_treewidth_reports_width(self):
        """treewidth reports the decomposition width."""
        assert run_algorithm(self.inst_a, "treewidth").width is not None

    def test_real_lp(self):
        """real-lp answers with an exact rational center and no binary center."""
        report = run_algorithm(self.inst_a, "real-lp").to_report()
        assert report.status == "yes"
        assert report.center is None
        assert len(report.real_center) == 3
        assert report.radius_squared is not None

    def test_no_report(self):
        """A NO report leaves the witness fields empty."""
        parity = Instance(2, reds=(bv("10"), bv("01")), blues=(bv("11"), bv("00")))
        report = run_algorithm(parity, "ilp").to_report()
        assert report.status == "no"
        assert "center" not in report.model_dump(exclude_none=True)


class TestReverification:
    """YES answers are checked before they leave the service."""

    def setup_method(self):
        self.inst_a = Instance(3, reds=(bv("000"),), blues=(bv("110"), bv("101")))

    def test_bad_center(self):
        """A misplaced vector raises VerificationError."""
        with pytest.raises(VerificationError):
            reverify(self.inst_a, Solution(bv("110"), 1), None, "test")

    def test_budget_violation(self):
        """A center above the budget raises VerificationError."""
        with pytest.raises(VerificationError):
            reverify(self.inst_a, Solution(bv("111"), 1), 2, "test")

    def test_broken_runner_is_caught(self):
        """A runner returning a wrong center is reported, not passed through."""
        broken = lambda inst, options: (Solution(bv("000"), 0), {})  # noqa: E731
        with patch.dict(RUNNERS, {"ilp": broken}):
            with pytest.raises(VerificationError):
                run_algorithm(self.inst_a, "ilp")
