"""Generators for the extremal and sharpness constructions.

Every generator returns a validated :class:`PlaneGraph` (or
:class:`CircuitGraph`) whose vertex, edge and deficiency counts follow the
closed formulas documented on each function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .embedding import (
    CircuitGraph,
    PlaneGraph,
    rotation_from_faces,
    same_cycle,
    validate_circuit_graph,
)
from .planarity import embed


def triangle() -> PlaneGraph:
    return PlaneGraph(3, ((1, 2), (2, 0), (0, 1)), (0, 2, 1))


def insert_vertex(g: PlaneGraph, face: Sequence[int], outer: Sequence[int] | None = None) -> PlaneGraph:
    """Add a vertex inside ``face`` (a traced face walk) joined to all its vertices."""
    z = g.n
    rotation = [list(r) for r in g.rotation]
    k = len(face)
    for i in range(k):
        x, prev = face[i], face[i - 1]
        r = rotation[x]
        r.insert(r.index(prev) + 1, z)
    rotation.append(list(reversed(face)))
    return PlaneGraph(g.n + 1, rotation, outer, g.labels + (z,))


def tetrahedron() -> PlaneGraph:
    """K_4 with outer face (0, 2, 1) and vertex 3 inside."""
    t = triangle()
    return insert_vertex(t, (0, 1, 2), outer=(0, 2, 1))


def stacked_triangulation(v: int) -> PlaneGraph:
    """Deterministic stacked triangulation on ``v >= 3`` vertices.

    Starts from the triangle with outer face (0, 2, 1) and repeatedly puts a
    new apex into the first interior face that contains the newest vertex.
    """
    if v < 3:
        raise ValueError("a triangulation needs at least 3 vertices")
    g = triangle()
    while g.n < v:
        newest = g.n - 1
        face = next(f for f in g.faces.interior() if newest in f)
        g = insert_vertex(g, face, outer=g.outer)
    return g


def kleetope(base: PlaneGraph, iterations: int) -> PlaneGraph:
    """Put a new vertex into every face, ``iterations`` times.

    Each round multiplies the face count by 3; a triangulation stays a
    triangulation (e = 3v - 6).
    """
    if iterations < 0:
        raise ValueError("iterations must be non-negative")
    g = base
    for _ in range(iterations):
        faces = g.faces.faces
        if any(len(f) != 3 for f in faces):
            raise ValueError("kleetope needs a triangulation")
        rotation = [list(r) for r in g.rotation]
        for j, face in enumerate(faces):
            z = g.n + j
            for i in range(3):
                r = rotation[face[i]]
                r.insert(r.index(face[i - 1]) + 1, z)
            rotation.append(list(reversed(face)))
        g = PlaneGraph(len(rotation), rotation)
    return g


def cycle_graph(n: int) -> PlaneGraph:
    rotation = [((v + 1) % n, (v - 1) % n) for v in range(n)]
    g = PlaneGraph(n, rotation)
    return g.with_outer(g.faces.faces[0])


def wheel(spokes: int) -> PlaneGraph:
    """Cycle 0..spokes-1 plus hub ``spokes``; outer face is the rim."""
    c = cycle_graph(spokes)
    return insert_vertex(c, c.faces.faces[1], outer=c.faces.faces[0])


def cube() -> PlaneGraph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    g = embed(8, edges)
    return g.with_outer(g.faces.faces[0])


# ---------------------------------------------------------------------------
# Sharpness chain
# ---------------------------------------------------------------------------


def sharp_chain(t: int, iterations: int) -> CircuitGraph:
    """Circuit graph showing the near-triangulation threshold is tight.

    Start with a (t-1)-vertex stacked triangulation ``G_0`` and a designated
    outer edge ``uv``.  Each round glues three fresh copies ``T_1, T_2, T_3``
    of that triangulation along the path ``u = p_1, q_1 = p_2, q_2 = p_3,
    q_3 = v`` so that ``u v q_2 q_1`` becomes a new interior 4-face with the
    copies on its outer side.  The next designated edge is the first outer
    edge of ``T_2``.  After ``i`` rounds: ``v = (t-1) + i(3t-7)`` and
    ``m = i``.
    """
    if t < 4:
        raise ValueError("sharp_chain needs t >= 4")
    if iterations < 0:
        raise ValueError("iterations must be non-negative")
    block = stacked_triangulation(t - 1)
    block_outer = block.outer_face()
    block_inner = block.faces.interior()
    # designate dart q -> p on the block's outer walk; the walk from p back to q
    # (without that dart) becomes new outer boundary after gluing
    q, p = block_outer[0], block_outer[1]
    tail = list(block_outer[1:]) + [block_outer[0]]  # p ... q

    n = block.n
    inner = [list(f) for f in block_inner]
    outer = list(block_outer)
    du, dv = outer[0], outer[1]
    for _ in range(iterations):
        i = outer.index(du)
        assert outer[(i + 1) % len(outer)] == dv
        q1, q2 = n, n + 1
        n += 2
        ends = [(du, q1), (q1, q2), (q2, dv)]
        paths = []
        for pj, qj in ends:
            relabel = {p: pj, q: qj}
            for x in range(block.n):
                if x not in relabel:
                    relabel[x] = n
                    n += 1
            inner.extend([relabel[x] for x in f] for f in block_inner)
            paths.append([relabel[x] for x in tail])
        inner.append([du, dv, q2, q1])
        bridge = paths[0] + paths[1][1:] + paths[2][1:]
        rot = outer[i + 1 :] + outer[: i + 1]  # starts at dv, ends at du
        outer = rot[:-1] + bridge[:-1]
        du, dv = paths[1][0], paths[1][1]
    rotation = rotation_from_faces(n, inner + [outer])
    g = PlaneGraph(n, rotation, tuple(outer))
    return validate_circuit_graph(g, tuple(outer))


# ---------------------------------------------------------------------------
# Vertex substitution
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Substitution:
    graph: PlaneGraph
    copies: tuple[tuple[int, ...], ...]  # copies[w][x] = vertex of x in the copy replacing w
    subdivisions: tuple[int, ...]  # one vertex per host edge, host.edges order


def substitute_with_copies(host: PlaneGraph, block: PlaneGraph, face_triangle: Sequence[int]) -> Substitution:
    """Subdivide every host edge and blow each host vertex up into ``block``.

    Host vertex ``w`` becomes a copy of ``block``; the ``deg(w)`` subdivision
    vertices around ``w`` are joined, in rotation order, to distinct vertices
    of ``face_triangle``.  Counts: ``v = v_host*v(B) + e_host`` and
    ``e = v_host*e(B) + 2*e_host``.
    """
    for w in range(host.n):
        if host.degree(w) not in (2, 3):
            raise ValueError(f"host vertex {w} has degree {host.degree(w)}; need 2 or 3")
    face = next((f for f in block.faces.faces if same_cycle(f, face_triangle)), None)
    if face is None or len(face) != 3:
        raise ValueError(f"{list(face_triangle)} is not a facial triangle of the block")
    bn = block.n
    base = host.n * bn
    sub_of = {frozenset(e): base + j for j, e in enumerate(host.edges)}
    rotation: list[list[int]] = []
    for w in range(host.n):
        for x in range(bn):
            rotation.append([w * bn + y for y in block.rotation[x]])
    sub_rot: dict[int, list[int]] = {s: [] for s in sub_of.values()}
    for w in range(host.n):
        # host rotation is clockwise; the face walk runs the other way round
        # the copy, so slots are taken in reverse face order
        for slot, nb in enumerate(host.rotation[w]):
            s = sub_of[frozenset((w, nb))]
            i = (-slot) % 3
            x, prev = face[i], face[i - 1]
            r = rotation[w * bn + x]
            r.insert(r.index(w * bn + prev) + 1, s)
            sub_rot[s].append(w * bn + x)
    for s in sorted(sub_rot):
        rotation.append(sub_rot[s])
    g = PlaneGraph(len(rotation), rotation)
    copies = tuple(tuple(w * bn + x for x in range(bn)) for w in range(host.n))
    return Substitution(g, copies, tuple(sorted(sub_rot)))


def substitute(host: PlaneGraph, block: PlaneGraph, face_triangle: Sequence[int]) -> PlaneGraph:
    return substitute_with_copies(host, block, face_triangle).graph


# ---------------------------------------------------------------------------
# Theta fixture
# ---------------------------------------------------------------------------

# polar coordinates (degrees, radius) of the 13 drawn vertices, labels 1..13
_FIG2_POLAR = {
    1: (0, 0.0),
    2: (90, 1.0), 3: (210, 1.0), 4: (330, 1.0),
    5: (150, 1.0), 6: (270, 1.0), 7: (30, 1.0),
    8: (120, 1.25), 9: (180, 1.25), 10: (240, 1.25),
    11: (300, 1.25), 12: (360, 1.25), 13: (60, 1.25),
}
_FIG2_EDGES = [
    (1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4),
    (2, 5), (2, 7), (3, 5), (3, 6), (4, 6), (4, 7),
    (8, 2), (8, 5), (9, 5), (9, 3), (10, 3), (10, 6),
    (11, 6), (11, 4), (12, 4), (12, 7), (13, 7), (13, 2),
]
_FIG2_OUTER = (8, 5, 9, 3, 10, 6, 11, 4, 12, 7, 13, 2)


def _clockwise_rotation(pos: dict[int, tuple[float, float]], edges) -> list[tuple[int, ...]]:
    nbrs: dict[int, list[int]] = {v: [] for v in pos}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rotation = []
    for v in sorted(pos):
        x0, y0 = pos[v]
        order = sorted(nbrs[v], key=lambda w: -math.atan2(pos[w][1] - y0, pos[w][0] - x0))
        rotation.append(tuple(order))
    return rotation


def figure2_fixture() -> PlaneGraph:
    """13-vertex near triangulation with a 12-cycle and no 12-cycle with a
    chord between vertices at distance 6.  Drawn label ``i`` is vertex
    ``i - 1``.
    """
    pos = {}
    for v, (deg, rad) in _FIG2_POLAR.items():
        a = math.radians(deg)
        pos[v - 1] = (rad * math.cos(a), rad * math.sin(a))
    edges = [(a - 1, b - 1) for a, b in _FIG2_EDGES]
    rotation = _clockwise_rotation(pos, edges)
    return PlaneGraph(13, rotation, tuple(v - 1 for v in _FIG2_OUTER))
