from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from planturan.constructions import cube, cycle_graph, figure2_fixture, kleetope, tetrahedron, wheel
from planturan.corpus import random_circuit_graph
from planturan.embedding import is_cycle
from planturan.patterns import (
    AcyclicGraph,
    CircumferenceLess,
    ExactCycle,
    Pattern,
    Theta,
    ThetaMember,
    circumference,
    girth,
    has_cycle_at_least,
    has_cycle_of_length,
    has_theta,
    iter_cycles,
    iter_cycles_of_length,
    matches,
    parse_pattern,
    validate_theta,
)
from planturan.budget import Budget, BudgetExceeded
from planturan.search import enumerate_planar, plane_graph

import oracles

# exact values frozen from the solver
KLEETOPE1_CIRCUMFERENCE = 8
THETA_FIXTURE_CIRCUMFERENCE = 12


class TestExamples:
    def test_k4(self):
        g = tetrahedron()
        assert has_cycle_of_length(g, 4) is not None
        assert has_theta(g, 4, 2) is not None
        assert circumference(g)[0] == 4
        assert girth(g) == 3

    def test_cube(self):
        g = cube()
        assert has_cycle_of_length(g, 5) is None
        assert circumference(g)[0] == 8
        assert girth(g) == 4

    def test_c9_girth(self):
        assert girth(cycle_graph(9)) == 9

    def test_theta_fixture(self):
        g = figure2_fixture()
        assert has_cycle_of_length(g, 12) is not None
        w = has_theta(g, 12, 2)
        assert w is not None and validate_theta(g, w, 12)
        assert has_theta(g, 12, 6) is None
        assert matches(g, ThetaMember(12, 6)) == (False, None)

    def test_theta_fixture_circumference(self):
        length, cyc = circumference(figure2_fixture())
        assert length == THETA_FIXTURE_CIRCUMFERENCE
        assert is_cycle(figure2_fixture(), cyc)

    def test_kleetope_circumference(self):
        g = kleetope(tetrahedron(), 1)
        length, cyc = circumference(g)
        assert length == KLEETOPE1_CIRCUMFERENCE
        assert all(has_theta(g, k, 2) is None for k in range(length + 1, g.n + 2))

    def test_matches(self):
        assert matches(tetrahedron(), ExactCycle(3))[0]
        assert matches(cycle_graph(5), CircumferenceLess(6)) == (True, None)
        found, w = matches(cycle_graph(5), CircumferenceLess(5))
        assert not found and len(w) == 5

    def test_acyclic(self):
        path = plane_graph((0b10, 0b101, 0b10))
        with pytest.raises(AcyclicGraph):
            circumference(path)
        with pytest.raises(AcyclicGraph):
            girth(path)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            circumference(kleetope(tetrahedron(), 2), Budget(max_nodes=50))


class TestPatternSyntax:
    @pytest.mark.parametrize("text", ["c3", "theta4", "theta12.6", "circ5"])
    def test_round_trip(self, text):
        assert str(parse_pattern(text)) == text

    def test_theta_member_two_is_theta(self):
        assert ThetaMember(7, 2) == Theta(7)

    @pytest.mark.parametrize("text", ["c2", "theta3", "theta8.5", "theta8.1", "x4", "circ2"])
    def test_rejected(self, text):
        with pytest.raises(ValueError):
            parse_pattern(text)

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            Pattern("path", 4)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_detectors_match_naive_oracle(n):
    """Every connected planar class on n vertices, every k and d."""
    for masks in enumerate_planar(n).masks:
        g = plane_graph(masks)
        edges = g.edges
        for k in range(3, n + 1):
            got = has_cycle_of_length(g, k)
            assert (got is not None) == oracles.naive_has_cycle(n, edges, k)
            if got is not None:
                assert is_cycle(g, got) and len(got) == k
        for k in range(4, n + 1):
            for d in range(2, k // 2 + 1):
                w = has_theta(g, k, d)
                assert (w is not None) == oracles.naive_has_theta(n, edges, k, d)
                if w is not None:
                    assert validate_theta(g, w, k, d)
        expected = oracles.naive_circumference(n, edges)
        if expected:
            assert circumference(g)[0] == expected
        for k in range(3, n + 2):
            assert matches(g, CircumferenceLess(k))[0] == (expected < k)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_detector_invariants(seed):
    rng = random.Random(seed)
    cg = None
    while cg is None:
        cg = random_circuit_graph(rng.randint(5, 13), rng, rng.randrange(8), rng.randrange(3))
    g = cg.graph
    length, _ = circumference(g)
    for k in range(4, g.n + 1):
        if has_theta(g, k, 2) is not None:
            assert has_cycle_of_length(g, k) is not None
        assert (has_cycle_at_least(g, k) is not None) == (length >= k)
        assert (not matches(g, CircumferenceLess(k))[0]) == (length >= k)


def test_cycle_iterators_agree():
    g = wheel(6)
    total = sum(1 for _ in iter_cycles(g))
    by_length = sum(sum(1 for _ in iter_cycles_of_length(g, k)) for k in range(3, g.n + 1))
    assert total == by_length
    assert all(c[1] < c[-1] and c[0] == min(c) for c in iter_cycles(g))
