"""Seeded random generators for circuit graphs and near triangulations.

Everything starts from a random stacked triangulation, scrambled by edge
flips.  Deleting edges of the outer face lengthens the outer cycle; deleting
edges between two interior triangles creates larger interior faces.  Every
output is validated before it is returned.
"""

from __future__ import annotations

import random
from typing import Iterator

from .embedding import (
    CircuitGraph,
    CircuitGraphError,
    EmbeddingError,
    PlaneGraph,
    delete_edges,
    validate_circuit_graph,
)
from .tri_extract import precondition_holds


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> PlaneGraph:
    """Stacked triangulation on ``n >= 3`` vertices followed by random flips."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rotation: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2), (0, 2, 1)]
    while len(rotation) < n:
        z = len(rotation)
        face = faces.pop(rng.randrange(len(faces)))
        for i in range(3):
            x, prev = face[i], face[i - 1]
            rotation[x].insert(rotation[x].index(prev) + 1, z)
        rotation.append(list(reversed(face)))
        a, b, c = face
        faces.extend([(a, b, z), (b, c, z), (c, a, z)])
    g = PlaneGraph(n, rotation)
    for _ in range(flips if flips is not None else 2 * n):
        g = _random_flip(g, rng)
    return g


def _random_flip(g: PlaneGraph, rng: random.Random) -> PlaneGraph:
    u, v = g.edges[rng.randrange(g.e)]
    if g.degree(u) <= 3 or g.degree(v) <= 3:
        return g
    a = g.succ(v, u)  # face u, v, a
    b = g.succ(u, v)  # face v, u, b
    if a == b or g.has_edge(a, b):
        return g
    rotation = [list(r) for r in g.rotation]
    rotation[u].remove(v)
    rotation[v].remove(u)
    rotation[a].insert(rotation[a].index(v) + 1, b)
    rotation[b].insert(rotation[b].index(u) + 1, a)
    return PlaneGraph(g.n, rotation)


def _outer_edges_removed(g: PlaneGraph, count: int, rng: random.Random) -> PlaneGraph:
    """Delete ``count`` outer edges whose inner triangle has its apex off the outer face."""
    for _ in range(count):
        outer = g.outer_face()
        options = []
        for i in range(len(outer)):
            u, v = outer[i], outer[(i + 1) % len(outer)]
            face = g.faces.faces[g.faces.dart_face[(v, u)]]
            apex = next((x for x in face if x not in (u, v)), None)
            if len(face) == 3 and apex not in outer:
                options.append((u, v, apex))
        if not options:
            break
        u, v, apex = rng.choice(options)
        i = outer.index(u)
        new_outer = outer[: i + 1] + (apex,) + outer[i + 1 :]
        g = delete_edges(g, [(u, v)], outer=new_outer)
    return g


def _interior_edges_removed(g: PlaneGraph, count: int, rng: random.Random) -> PlaneGraph:
    """Delete ``count`` edges with interior faces on both sides."""
    for _ in range(count):
        fs = g.faces
        options = [
            (u, v)
            for u, v in g.edges
            if fs.outer not in (fs.dart_face[(u, v)], fs.dart_face[(v, u)])
            and g.degree(u) > 2
            and g.degree(v) > 2
        ]
        if not options:
            break
        u, v = rng.choice(options)
        g = delete_edges(g, [(u, v)], outer=g.outer)
    return g


def random_circuit_graph(
    n: int, rng: random.Random, outer_cuts: int = 0, interior_cuts: int = 0
) -> CircuitGraph | None:
    """A validated circuit graph, or None when the random choices broke it."""
    g = random_triangulation(n, rng)
    g = g.with_outer(g.faces.faces[rng.randrange(len(g.faces))])
    try:
        g = _outer_edges_removed(g, outer_cuts, rng)
        g = _interior_edges_removed(g, interior_cuts, rng)
        return validate_circuit_graph(g, g.outer)
    except (CircuitGraphError, EmbeddingError):
        return None


def random_near_triangulation(n: int, rng: random.Random) -> PlaneGraph:
    g = random_triangulation(n, rng)
    g = g.with_outer(g.faces.faces[rng.randrange(len(g.faces))])
    return _outer_edges_removed(g, rng.randrange(n), rng)


def threshold_corpus(count: int, t: int, max_v: int, seed: int, min_v: int | None = None
                     ) -> Iterator[CircuitGraph]:
    """``count`` circuit graphs with v <= ``max_v`` meeting the extraction threshold.

    Most instances have positive deficiency when ``max_v`` allows it.
    """
    rng = random.Random(seed)
    low = min_v if min_v is not None else t
    made = 0
    while made < count:
        n = rng.randint(max(low, 3), max_v)
        # largest m the threshold allows at this size
        m_cap = max(0, (n - t) // (3 * t - 7))
        interior = rng.randint(1, m_cap) if m_cap and rng.random() < 0.7 else 0
        cg = random_circuit_graph(n, rng, rng.randrange(n), interior)
        if cg is None or not precondition_holds(cg, t):
            continue
        made += 1
        yield cg
