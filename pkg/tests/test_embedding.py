from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from planturan.constructions import (
    cycle_graph,
    figure2_fixture,
    kleetope,
    sharp_chain,
    stacked_triangulation,
    tetrahedron,
)
from planturan.corpus import random_triangulation
from planturan.embedding import (
    AsymmetricAdjacency,
    BadTwoCut,
    CircuitGraph,
    DisconnectedGraph,
    LabelOutOfRange,
    MalformedPlg,
    NotACycle,
    NotFacial,
    NotPlanarEmbedding,
    NotTwoConnected,
    OuterNotFace,
    PlaneGraph,
    RepeatedNeighbor,
    SelfLoop,
    cuts,
    deficiency_m,
    face_darts,
    inside_faces,
    interior_of_cycle,
    normalize_plg,
    parse_plg,
    same_cycle,
    serialize_plg,
    subgraph,
    trace_faces,
    validate_circuit_graph,
)
from planturan.planarity import embed

K4_PLG = """PLG 1
n=4
0: 1 2 3
1: 2 0 3
2: 0 1 3
3: 2 1 0
outer: 0 2 1
"""

BOWTIE = PlaneGraph(5, ((1, 2, 3, 4), (2, 0), (0, 1), (4, 0), (0, 3)))


def random_graphs(count, seed=0):
    rng = random.Random(seed)
    return [random_triangulation(rng.randint(3, 16), rng) for _ in range(count)]


class TestParse:
    def test_k4(self):
        g = parse_plg(K4_PLG.encode())
        assert (g.n, g.e) == (4, 6)
        assert g.outer == (0, 2, 1)

    def test_round_trip_is_normalisation(self):
        messy = "# a comment\nPLG 1\n n = 4 \n0:1  2 3 # x\n1: 2 0 3\n\n2: 0 1 3\n3: 2 1 0\nouter:0 2   1\n"
        g = parse_plg(messy)
        assert serialize_plg(g) == normalize_plg(messy)
        assert serialize_plg(parse_plg(serialize_plg(g))) == serialize_plg(g)

    @pytest.mark.parametrize(
        "text, error, line",
        [
            ("PLG 2\nn=1\n0:\n", MalformedPlg, 1),
            ("PLG 1\nn=x\n", MalformedPlg, 2),
            ("PLG 1\nn=4\n0: 1 2 3\n1: 2 0 3\n2: 0 1 3\n3: 2 1 5\n", LabelOutOfRange, 6),
            ("PLG 1\nn=3\n0: 1 2\n1: 2 0\n2: 0\n", AsymmetricAdjacency, None),
            ("PLG 1\nn=3\n0: 1 1\n1: 0\n2:\n", RepeatedNeighbor, 3),
            ("PLG 1\nn=2\n0: 0\n1:\n", SelfLoop, 3),
            ("PLG 1\nn=4\n0: 1\n1: 0\n2: 3\n3: 2\n", DisconnectedGraph, None),
            ("PLG 1\nn=4\n0: 1 2 3\n1: 2 0 3\n2: 0 1 3\n3: 2 1 0\nouter: 0 1 3 2\n", OuterNotFace, 7),
            ("PLG 1\nn=2\n0: 1\n", MalformedPlg, None),
        ],
    )
    def test_errors_name_a_line(self, text, error, line):
        with pytest.raises(error) as info:
            parse_plg(text)
        if line is not None:
            assert info.value.line == line
            assert str(info.value).startswith(f"line {line}:")

    def test_non_planar_rotation_rejected(self):
        # K_{3,3} with arbitrary rotations cannot close up on the sphere
        rot = [(3, 4, 5)] * 3 + [(0, 1, 2)] * 3
        with pytest.raises(NotPlanarEmbedding):
            PlaneGraph(6, rot)

    def test_non_ascii(self):
        with pytest.raises(MalformedPlg):
            parse_plg("PLG 1\nn=1\n0: é\n".encode("utf-8"))


class TestFaces:
    def test_k4_has_four_triangles(self):
        fs = trace_faces(tetrahedron())
        assert sorted(len(f) for f in fs.faces) == [3, 3, 3, 3]

    def test_four_cycle(self):
        assert [len(f) for f in cycle_graph(4).faces.faces] == [4, 4]

    def test_theta_fixture_faces(self):
        g = figure2_fixture()
        fs = g.faces
        assert len(fs) == 13 == 2 + g.e - g.n
        assert len(fs.faces[fs.outer]) == 12
        assert sum(len(f) == 3 for f in fs.interior()) == 12

    def test_outer_prefers_exact_orientation(self):
        g = tetrahedron()
        assert g.outer_face() == (0, 2, 1)

    @pytest.mark.parametrize("g", random_graphs(25) + [figure2_fixture(), cycle_graph(7), sharp_chain(5, 2).graph])
    def test_euler_and_dart_partition(self, g):
        fs = g.faces
        assert g.n - g.e + len(fs) == 2
        darts = [d for f in fs.faces for d in face_darts(f)]
        assert len(darts) == len(set(darts)) == 2 * g.e


class TestDeficiency:
    def test_k4(self):
        assert validate_circuit_graph(tetrahedron()).m == 0

    def test_c4(self):
        assert validate_circuit_graph(cycle_graph(4)).m == 1

    def test_theta_fixture(self):
        assert validate_circuit_graph(figure2_fixture()).m == 0

    def test_chain(self):
        cg = sharp_chain(4, 3)
        assert deficiency_m(cg) == 3 == sum(len(f) - 3 for f in cg.graph.faces.interior())


class TestInterior:
    def test_k4_face(self):
        g = tetrahedron()
        sub = interior_of_cycle(g, (0, 1, 3))
        assert (sub.n, sub.e) == (3, 3)
        assert sorted(sub.labels) == [0, 1, 3]

    def test_outer_cycle_gives_whole_graph(self):
        g = figure2_fixture()
        sub = interior_of_cycle(g, g.outer)
        assert sub == g

    def test_theta_fixture_inner_triangle(self):
        # drawn labels 2,3,4 are vertices 1,2,3; the centre (drawn 1) is vertex 0
        sub = interior_of_cycle(figure2_fixture(), (1, 2, 3))
        assert (sub.n, sub.e) == (4, 6)
        assert sorted(sub.labels) == [0, 1, 2, 3]

    def test_not_a_cycle(self):
        with pytest.raises(NotACycle):
            interior_of_cycle(tetrahedron(), (0, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000))
    def test_facial_cycle_interior_is_itself(self, seed):
        rng = random.Random(seed)
        g = random_triangulation(rng.randint(4, 14), rng)
        g = g.with_outer(g.faces.faces[0])
        f = g.faces.faces[rng.randrange(1, len(g.faces))]
        sub = interior_of_cycle(g, f)
        assert (sub.n, sub.e) == (3, 3)


class TestCuts:
    def test_k4(self):
        g = tetrahedron()
        assert cuts(g, 1) == [] and cuts(g, 2) == []

    def test_bowtie(self):
        assert cuts(BOWTIE, 1) == [(0,)]

    def test_c4(self):
        assert cuts(cycle_graph(4), 2) == [(0, 2), (1, 3)]


class TestCircuitGraph:
    def test_k4_any_face(self):
        g = tetrahedron()
        for f in g.faces.faces:
            assert isinstance(validate_circuit_graph(g, f), CircuitGraph)

    def test_bowtie(self):
        with pytest.raises(NotTwoConnected) as info:
            validate_circuit_graph(BOWTIE.with_outer((0, 2, 1)))
        assert info.value.cut_vertex == 0

    def test_chain(self):
        cg = sharp_chain(4, 1)
        assert validate_circuit_graph(cg.graph, cg.outer_cycle).m == 1

    def test_not_facial(self):
        g = stacked_triangulation(5)
        # a separating triangle is a cycle but not a face
        sep = next(
            c for c in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
            if all(g.has_edge(c[i], c[i - 1]) for i in range(3)) and not any(same_cycle(c, f) for f in g.faces.faces)
        )
        with pytest.raises(NotFacial):
            validate_circuit_graph(g, sep)

    def test_bad_two_cut(self):
        # 4-cycle plus a path 0-4-2 drawn inside; {0, 2} cuts 4 off the outer cycle
        g = embed(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
        outer = next(f for f in g.faces.faces if set(f) == {0, 1, 2, 3})
        with pytest.raises(BadTwoCut) as info:
            validate_circuit_graph(g, outer)
        assert info.value.cut == (0, 2)
        assert info.value.component == (4,)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000))
    def test_triangulations_accept_every_face(self, seed):
        rng = random.Random(seed)
        g = random_triangulation(rng.randint(4, 12), rng)
        for f in g.faces.faces:
            cg = validate_circuit_graph(g, f)
            assert cg.m == 0


def test_subgraph_composes_labels():
    g = kleetope(tetrahedron(), 1)
    a = subgraph(g, [1, 2, 3, 5, 6, 7])
    b = subgraph(a, [1, 2, 3])
    assert b.labels == (a.labels[1], a.labels[2], a.labels[3])


def test_inside_faces_needs_outer():
    with pytest.raises(ValueError):
        inside_faces(PlaneGraph(3, ((1, 2), (2, 0), (0, 1))), (0, 1, 2))
