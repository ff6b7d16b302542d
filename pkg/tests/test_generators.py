"""
Tests for random instance generation, source-problem files and the hardness
constructions used as known-answer generators.
"""

from pathlib import Path

import pytest

from hyperball.core.exceptions import InstanceError, ParseError
from hyperball.services.generators import (
    Gamma4Constraint,
    Gamma4Instance,
    HittingSetInstance,
    MCISInstance,
    MRInstance,
    gen_path_instance,
    gen_random,
    mr_center_from_2red,
    parse_gamma4,
    parse_hitting_set,
    parse_mcis,
    parse_mr,
    random_gamma4,
    random_hitting_set,
    random_mcis,
    random_mr,
    read_source,
    reduce_gamma4,
    reduce_hittingset,
    reduce_mcis,
    reduce_mr_to_2blue,
    reduce_mr_to_2red,
    rest_mr_variants,
    solve_gamma4_bf,
    solve_hittingset_bf,
    solve_mcis_bf,
    solve_mr_bf,
    solve_mr_via_2red,
    solve_rest_mr_bf,
    write_gamma4,
    write_hitting_set,
    write_mcis,
    write_mr,
)
from hyperball.services.geometry import BitVector, hamming, verify
from hyperball.services.ilp import solve_ilp
from hyperball.services.oracle import brute_force_solve, solve_bounded_conciseness

DATA = Path(__file__).resolve().parent.parent / "data" / "instances"


def bv(bits: str) -> BitVector:
    return BitVector.from_bits(bits)


def oracle(inst):
    result = brute_force_solve(inst)
    return result.solution if result is not None else None


class TestRandomInstances:
    """gen_random and gen_path_instance."""

    def test_deterministic(self):
        """Same arguments, same instance; another seed usually differs."""
        assert gen_random(8, 5, 5, 3, seed=11) == gen_random(8, 5, 5, 3, seed=11)
        assert gen_random(8, 5, 5, 3, seed=11) != gen_random(8, 5, 5, 3, seed=12)

    def test_shape(self):
        """Counts and the conciseness cap are respected."""
        inst = gen_random(10, 6, 4, 3, seed=1)
        assert inst.dim == 10
        assert len(inst.reds) == 6 and len(inst.blues) == 4
        assert inst.icon <= 3

    def test_forced_instance(self):
        """In d = 1 with icon 1 the two vectors must be 0 and 1."""
        inst = gen_random(1, 1, 1, 1, seed=5)
        assert {inst.reds[0], inst.blues[0]} == {bv("0"), bv("1")}

    @pytest.mark.parametrize(
        "args",
        [(0, 1, 1, 0), (3, -1, 1, 1), (3, 1, 1, 4), (2, 3, 2, 2)],
    )
    def test_bad_parameters(self, args):
        """Impossible requests raise ValueError."""
        with pytest.raises(ValueError):
            gen_random(*args, seed=0)

    def test_rejection_limit(self):
        """icon 0 allows only one vector, so a second draw gives up."""
        with pytest.raises(ValueError):
            gen_random(4, 1, 1, 0, seed=0)

    def test_path_windows(self):
        """Supports span at most `window` consecutive coordinates."""
        inst = gen_path_instance(30, 6, 6, window=3, seed=4)
        for vector in inst.vectors:
            assert vector.conciseness >= 1
            assert vector.support[-1] - vector.support[0] < 3
        with pytest.raises(ValueError):
            gen_path_instance(3, 1, 1, window=4)


class TestSourceFiles:
    """Parsers and writers of the source problems."""

    def test_hitting_set_file(self):
        """The shipped example has budget 2 and three sets of size 2."""
        hs = read_source(DATA / "hs.txt", parse_hitting_set)
        assert hs.k == 2
        assert hs.universe == ("a", "b", "c", "d")
        assert hs.set_size == 2
        assert parse_hitting_set(write_hitting_set(hs)) == hs

    def test_hitting_set_errors(self):
        """Missing budget, repeated elements and unknown tags are rejected."""
        with pytest.raises(ParseError):
            parse_hitting_set("s a b\n")
        with pytest.raises(ParseError):
            parse_hitting_set("k 1\ns a a\n")
        with pytest.raises(ParseError):
            parse_hitting_set("k 1\nx a\n")
        with pytest.raises(InstanceError):
            HittingSetInstance(("a", "b"), (("a",), ("a", "b")), 1).set_size

    def test_mcis_file(self):
        """Parts, edges and the implied clique edges."""
        g = read_source(DATA / "mcis.txt", parse_mcis)
        assert g.k == 2 and g.n == 2
        assert g.adjacent("a", "c")
        assert g.adjacent("a", "b"), "Vertices of one part are adjacent"
        assert not g.adjacent("b", "d")
        assert parse_mcis(write_mcis(g)) == g

    def test_mcis_errors(self):
        """Unknown vertices, a wrong k and unequal parts are rejected."""
        with pytest.raises(ParseError):
            parse_mcis("p a b\np c d\ne a z\n")
        with pytest.raises(ParseError):
            parse_mcis("k 3\np a b\np c d\n")
        with pytest.raises(InstanceError):
            parse_mcis("p a b\np c\n")

    def test_gamma4_file(self):
        """Variables are listed in first-appearance order."""
        csp = read_source(DATA / "gamma4.txt", parse_gamma4)
        assert csp.variables == ("x1", "x2", "x3", "x4", "x5", "x6")
        assert len(csp.red_constraints) == 1 and len(csp.blue_constraints) == 2
        assert parse_gamma4(write_gamma4(csp)) == csp

    def test_gamma4_errors(self):
        """Arity, distinct variables and the relation tag are checked."""
        for text in ("B a b c\n", "B a b c c\n", "X a b c d\n"):
            with pytest.raises(ParseError):
                parse_gamma4(text)

    def test_mr_file(self):
        """MR files are single-colored instances of even dimension."""
        mr = read_source(DATA / "mr.bhc", parse_mr)
        assert mr.n == 2
        assert BitVector.zeros(4) in mr.vectors
        assert parse_mr(write_mr(mr)) == mr
        with pytest.raises(ParseError):
            parse_mr("d 3\nB 1\n")
        with pytest.raises(ParseError):
            parse_mr("d 2\nB 1\nR 2\n")

    def test_missing_source(self, tmp_path):
        """Unreadable source files surface as ParseError."""
        with pytest.raises(ParseError):
            read_source(tmp_path / "missing.txt", parse_mcis)


class TestSourceSolvers:
    """Exhaustive solvers of the source problems."""

    def test_hitting_set(self):
        """{b, c} hits every set of the example; a budget of 1 does not suffice."""
        hs = read_source(DATA / "hs.txt", parse_hitting_set)
        assert solve_hittingset_bf(hs)
        assert not solve_hittingset_bf(HittingSetInstance(hs.universe, hs.family, 1))

    def test_mcis(self):
        """Picking b and d avoids the only cross edge."""
        g = read_source(DATA / "mcis.txt", parse_mcis)
        assert solve_mcis_bf(g)
        complete = MCISInstance(
            (("a", "b"), ("c", "d")),
            frozenset(frozenset(e) for e in (("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"))),
        )
        assert not solve_mcis_bf(complete)

    def test_gamma4(self):
        """The shipped example is satisfiable."""
        csp = read_source(DATA / "gamma4.txt", parse_gamma4)
        assert solve_gamma4_bf(csp)

    def test_mr(self):
        """1010 is within 2 of 0000, 1100 and 0011 and has exactly two ones."""
        mr = read_source(DATA / "mr.bhc", parse_mr)
        assert solve_mr_bf(mr)
        assert solve_rest_mr_bf(mr)

    def test_size_limit(self):
        """Oversized sources are refused with InstanceError."""
        universe = tuple(f"u{i}" for i in range(13))
        with pytest.raises(InstanceError):
            solve_hittingset_bf(HittingSetInstance(universe, (), 1))


class TestMinimumRadiusConstruction:
    """MR to 2Red and 2Blue."""

    def test_layout(self):
        """Two extra coordinates; every V vector gets tail (0, 1) and the all-ones vector joins."""
        mr = MRInstance(1, (bv("00"), bv("11")))
        inst = reduce_mr_to_2red(mr)
        assert inst.dim == 4
        assert set(inst.blues) == {bv("0001"), bv("1101")}
        assert set(inst.reds) == {bv("0000"), bv("1111")}
        added = reduce_mr_to_2red(MRInstance(1, (bv("00"),)))
        assert set(added.blues) == {bv("0001"), bv("1101")}

    def test_two_blue_swaps_colors(self):
        """2Blue is the same construction with colors exchanged."""
        mr = MRInstance(1, (bv("00"),))
        red_side, blue_side = reduce_mr_to_2red(mr), reduce_mr_to_2blue(mr)
        assert set(blue_side.blues) == set(red_side.reds)
        assert set(blue_side.reds) == set(red_side.blues)

    def test_variants_contain_zero(self):
        """Each shifted copy of V holds the all-zero vector."""
        mr = MRInstance(2, (bv("1100"), bv("0110"), bv("1010")))
        for variant in rest_mr_variants(mr):
            assert BitVector.zeros(4) in variant.vectors

    @pytest.mark.parametrize("seed", range(50))
    def test_rest_mr_matches_2red(self, seed):
        """With 0 in V, Rest-MR answers like both the 2Red and the 2Blue separation instances."""
        n = 1 + seed % 3
        mr = random_mr(n, min(2 + seed % 4, 4 ** n), seed=seed)
        expected = solve_rest_mr_bf(mr)
        assert (oracle(reduce_mr_to_2red(mr)) is not None) == expected, f"seed {seed}, 2Red"
        assert (oracle(reduce_mr_to_2blue(mr)) is not None) == expected, f"seed {seed}, 2Blue"

    @pytest.mark.parametrize("seed", range(50))
    def test_mr_through_variants(self, seed):
        """Plain MR is decided by the shifted 2Red instances."""
        n = 1 + seed % 3
        mr = random_mr(n, min(2 + seed % 4, 4 ** n), seed=seed, include_zero=False)
        assert solve_mr_via_2red(mr, oracle) == solve_mr_bf(mr), f"seed {seed}"

    def test_center_projection(self):
        """Dropping the two extra coordinates leaves an MR center."""
        mr = read_source(DATA / "mr.bhc", parse_mr)
        solution = oracle(reduce_mr_to_2red(mr))
        center = mr_center_from_2red(mr, solution)
        assert all(hamming(v, center) <= mr.n for v in mr.vectors)


class TestHittingSetConstruction:
    """Hitting Set to conciseness-bounded separation."""

    def test_layout(self):
        """|U| element coordinates plus ℓ dummies; one red on the dummies."""
        hs = read_source(DATA / "hs.txt", parse_hitting_set)
        inst, scp = reduce_hittingset(hs)
        assert scp == 2
        assert inst.dim == 6
        assert set(inst.blues) == {bv("110000"), bv("011000"), bv("001100")}
        assert inst.reds == (bv("000011"),)

    def test_empty_family(self):
        """Nothing to hit: no red at all."""
        inst, _ = reduce_hittingset(HittingSetInstance(("a",), (), 0))
        assert inst.reds == ()

    def test_empty_set(self):
        """An empty set cannot be hit."""
        with pytest.raises(InstanceError):
            reduce_hittingset(HittingSetInstance(("a",), ((),), 1))

    @pytest.mark.parametrize("seed", range(50))
    def test_answers_agree(self, seed):
        """Hitting set of size ≤ k iff a center with ≤ k ones separates."""
        k = 1 + seed % 3
        universe = 4 + seed % 5
        hs = random_hitting_set(universe, 2 + seed % 4, 2 + seed % 2, k, seed=seed)
        inst, scp = reduce_hittingset(hs)
        found = solve_bounded_conciseness(inst, scp)
        assert (found is not None) == solve_hittingset_bf(hs), f"seed {seed}"
        if found is not None:
            assert verify(inst, found.center, found.radius)


class TestMcisConstruction:
    """Multicolored Independent Set to conciseness-bounded separation."""

    def test_layout(self):
        """nk vertex coordinates, nk − 2k + 1 dummies, one blue on all vertices."""
        g = read_source(DATA / "mcis.txt", parse_mcis)
        inst, scp = reduce_mcis(g)
        assert scp == 2
        assert inst.dim == 4 + 1
        assert inst.blues == (bv("11110"),)
        # edges a-b, c-d (parts) and a-c, each with the dummy, plus the dummy alone
        assert set(inst.reds) == {bv("11001"), bv("00111"), bv("10101"), bv("00001")}

    def test_example_center(self):
        """{a, d} separates with radius nk − k."""
        g = read_source(DATA / "mcis.txt", parse_mcis)
        inst, _ = reduce_mcis(g)
        assert verify(inst, bv("10010"), 2)

    def test_negative_dummies(self):
        """One vertex per part and k ≥ 2 is rejected."""
        with pytest.raises(InstanceError):
            reduce_mcis(MCISInstance((("a",), ("b",))))

    @pytest.mark.parametrize("seed", range(50))
    def test_answers_agree(self, seed):
        """An independent transversal exists iff a center with ≤ k ones separates."""
        k, n = [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)][seed % 5]
        g = random_mcis(k, n, edge_probability=0.3 + 0.1 * (seed % 5), seed=seed)
        inst, scp = reduce_mcis(g)
        found = solve_bounded_conciseness(inst, scp)
        assert (found is not None) == solve_mcis_bf(g), f"seed {seed}"


class TestGamma4Construction:
    """Γ4 CSP to separation with data conciseness 4."""

    def test_layout(self):
        """80 gadget coordinates after the variables; six gadget blues and 29 gadget reds."""
        csp = read_source(DATA / "gamma4.txt", parse_gamma4)
        inst = reduce_gamma4(csp)
        assert inst.dim == 6 + 80
        assert inst.icon == 4
        assert len(inst.blues) == 2 + 6
        assert len(inst.reds) == 1 + 29

    def test_clashing_scope(self):
        """The same scope under both relations is rejected."""
        scope = ("a", "b", "c", "d")
        csp = Gamma4Instance(scope, (Gamma4Constraint("R", scope), Gamma4Constraint("B", ("d", "c", "b", "a"))))
        with pytest.raises(InstanceError):
            reduce_gamma4(csp)

    def test_random_csp_shape(self):
        """random_gamma4 draws distinct scopes."""
        csp = random_gamma4(6, 5, seed=2)
        assert len({frozenset(c.scope) for c in csp.constraints}) == 5
        assert random_gamma4(6, 5, seed=2) == csp

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_random_answers_agree(self, seed):
        """A random CSP is satisfiable iff its instance separates."""
        csp = random_gamma4(5 + seed % 2, 1 + seed % 3, seed=seed)
        inst = reduce_gamma4(csp)
        solution = solve_ilp(inst)
        assert (solution is not None) == solve_gamma4_bf(csp), f"seed {seed}"
        if solution is not None:
            assert verify(inst, solution.center, solution.radius)

    @pytest.mark.slow
    def test_satisfiable_example(self):
        """The shipped satisfiable CSP gives a separable instance."""
        csp = read_source(DATA / "gamma4.txt", parse_gamma4)
        inst = reduce_gamma4(csp)
        solution = solve_ilp(inst)
        assert solution is not None
        assert verify(inst, solution.center, solution.radius)

    @pytest.mark.slow
    def test_unsatisfiable_example(self):
        """At least three of x1..x4 true forces three true inside some R scope with x5."""
        names = ["x1", "x2", "x3", "x4", "x5"]
        constraints = [Gamma4Constraint("B", ("x1", "x2", "x3", "x4"))]
        for dropped in ("x1", "x2", "x3", "x4"):
            constraints.append(Gamma4Constraint("R", tuple(v for v in names if v != dropped)))
        csp = Gamma4Instance(tuple(names), tuple(constraints))
        assert not solve_gamma4_bf(csp)
        assert solve_ilp(reduce_gamma4(csp)) is None
