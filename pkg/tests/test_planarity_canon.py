from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planturan.canon import canonical_form, canonical_order, code, relabel, to_masks
from planturan.embedding import PlaneGraph
from planturan.planarity import blocks, embed, is_planar, planar_rotation

import oracles


def random_connected(rng, n, p):
    while True:
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = oracles.nx_graph(n, edges)
        if nx.is_connected(g):
            return edges


def adj_lists(n, edges):
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 11), st.floats(0.15, 0.7))
def test_planarity_agrees_with_networkx(seed, n, p):
    rng = random.Random(seed)
    edges = random_connected(rng, n, p)
    expected = nx.check_planarity(oracles.nx_graph(n, edges))[0]
    rot = planar_rotation(n, adj_lists(n, edges))
    assert (rot is not None) == expected
    if rot is not None:
        g = PlaneGraph(n, rot)  # validates genus 0
        assert g.e == len(edges)


@pytest.mark.parametrize(
    "edges, planar",
    [
        (list(itertools.combinations(range(5), 2)), False),
        ([(a, b) for a in range(3) for b in range(3, 6)], False),
        ([e for e in itertools.combinations(range(5), 2) if e != (0, 1)], True),
    ],
)
def test_kuratowski(edges, planar):
    n = 1 + max(max(e) for e in edges)
    assert is_planar(n, adj_lists(n, edges)) is planar


def test_embed_rejects_nonplanar():
    with pytest.raises(ValueError):
        embed(5, list(itertools.combinations(range(5), 2)))


def test_blocks_of_bowtie():
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    bl = blocks(5, adj_lists(5, edges))
    assert sorted(sorted(v for e in b for v in e) for b in bl) == [[0, 0, 1, 1, 2, 2], [0, 0, 3, 3, 4, 4]]
    assert sorted(len(b) for b in bl) == [3, 3]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 9), st.floats(0.1, 0.9))
def test_canonical_form_is_relabelling_invariant(seed, n, p):
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    masks = to_masks(adj_lists(n, edges))
    perm = list(range(n))
    rng.shuffle(perm)
    assert canonical_form(masks) == canonical_form(relabel(masks, perm))
    order = canonical_order(masks)
    assert code(masks, order) == canonical_form(masks)[1]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_canonical_form_separates_classes(n):
    reps = oracles.orbit_representatives(n)
    forms = set()
    for m in reps:
        masks = to_masks(adj_lists(n, oracles.mask_edges(n, m)))
        forms.add(canonical_form(masks))
    assert len(forms) == len(reps)
