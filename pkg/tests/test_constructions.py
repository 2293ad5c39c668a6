from __future__ import annotations

import pytest

from planturan.constructions import (
    cube,
    cycle_graph,
    figure2_fixture,
    kleetope,
    sharp_chain,
    stacked_triangulation,
    substitute,
    substitute_with_copies,
    tetrahedron,
    triangle,
    wheel,
)
from planturan.embedding import cuts, is_near_triangulation, validate_circuit_graph
from planturan.patterns import girth, has_cycle_of_length
from planturan.planarity import embed, is_planar


class TestKleetope:
    @pytest.mark.parametrize("i, v", [(0, 4), (1, 8), (2, 20)])
    def test_counts(self, i, v):
        g = kleetope(tetrahedron(), i)
        assert g.n == v
        assert g.e == 3 * v - 6
        assert len(g.faces) == 4 * 3**i

    def test_three_connected(self):
        g = kleetope(tetrahedron(), 1)
        assert cuts(g, 1) == [] and cuts(g, 2) == []

    def test_needs_triangulation(self):
        with pytest.raises(ValueError):
            kleetope(cycle_graph(4), 1)


@pytest.mark.parametrize("v", [3, 4, 7, 12])
def test_stacked_triangulation(v):
    g = stacked_triangulation(v)
    assert g.n == v and g.e == 3 * v - 6


class TestSharpChain:
    @pytest.mark.parametrize("t", [4, 5, 6])
    @pytest.mark.parametrize("i", [0, 1, 2, 3])
    def test_count_laws(self, t, i):
        cg = sharp_chain(t, i)
        assert cg.n == (t - 1) + i * (3 * t - 7)
        assert cg.m == i
        inner = cg.graph.faces.interior()
        assert sum(len(f) == 4 for f in inner) == i
        assert all(len(f) in (3, 4) for f in inner)
        assert (3 * t - 7) * cg.m == cg.n - (t - 1)
        validate_circuit_graph(cg.graph, cg.outer_cycle)

    def test_small_example(self):
        cg = sharp_chain(4, 0)
        assert (cg.n, cg.m) == (3, 0)
        assert sharp_chain(4, 2).n == 13

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            sharp_chain(3, 1)


class TestSubstitute:
    def test_k4_in_k4(self):
        host, block = tetrahedron(), tetrahedron()
        s = substitute_with_copies(host, block, block.faces.faces[0])
        g = s.graph
        assert (g.n, g.e) == (22, 36)
        assert is_planar(g.n, [list(r) for r in g.rotation])
        for copy in s.copies:
            for a, b in block.edges:
                assert g.has_edge(copy[a], copy[b])
        for sv in s.subdivisions:
            assert g.degree(sv) == 2

    def test_cycle_host(self):
        g = substitute(cycle_graph(3), tetrahedron(), (0, 1, 3))
        assert (g.n, g.e) == (15, 24)

    def test_cube_host_keeps_large_girth_between_copies(self):
        g = substitute(cube(), tetrahedron(), (0, 2, 1))
        assert g.n == 8 * 4 + 12
        # a cycle through two copies uses at least 4 host edges, each subdivided
        assert has_cycle_of_length(g, 5) is None

    def test_degree_four_host_rejected(self):
        host = embed(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
        with pytest.raises(ValueError):
            substitute(host, tetrahedron(), (0, 2, 1))

    def test_non_facial_triangle_rejected(self):
        block = stacked_triangulation(5)
        with pytest.raises(ValueError):
            substitute(triangle(), block, (0, 1, 2, 3))


class TestThetaFixture:
    def test_counts(self):
        g = figure2_fixture()
        assert (g.n, g.e) == (13, 24)
        assert len(g.outer) == 12
        assert is_near_triangulation(g)
        # drawn 1 is the centre: adjacent to drawn 2, 3, 4 only
        assert sorted(g.rotation[0]) == [1, 2, 3]

    def test_outer_ring(self):
        g = figure2_fixture()
        assert [v + 1 for v in g.outer] == [8, 5, 9, 3, 10, 6, 11, 4, 12, 7, 13, 2]


def test_wheel():
    g = wheel(5)
    assert g.n == 6 and g.e == 10 and girth(g) == 3
