"""Combinatorial plane graphs.

A plane graph is stored as a rotation system: for every vertex the clockwise
cyclic order of its neighbours.  Faces are never stored, they are traced from
the rotations with the usual next-dart rule::

    next(u -> v) = v -> succ_v(u)

where ``succ_v`` is the clockwise successor in the rotation at ``v``.  All
orders produced here (faces, cuts, edges) are deterministic so that every
output of the package is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Base class for invalid plane graphs; ``line`` is set by the PLG reader."""

    def __init__(self, message: str, vertex: int | None = None, line: int | None = None):
        self.vertex = vertex
        self.line = line
        self.detail = message
        super().__init__(message if line is None else f"line {line}: {message}")


class MalformedPlg(EmbeddingError):
    pass


class LabelOutOfRange(EmbeddingError):
    pass


class SelfLoop(EmbeddingError):
    pass


class RepeatedNeighbor(EmbeddingError):
    pass


class AsymmetricAdjacency(EmbeddingError):
    pass


class DisconnectedGraph(EmbeddingError):
    pass


class NotPlanarEmbedding(EmbeddingError):
    """Face tracing gives v - e + f != 2."""


class OuterNotFace(EmbeddingError):
    pass


class CircuitGraphError(ValueError):
    pass


class NotACycle(CircuitGraphError):
    pass


class NotTwoConnected(CircuitGraphError):
    def __init__(self, cut_vertex: int | None):
        self.cut_vertex = cut_vertex
        if cut_vertex is None:
            super().__init__("graph has fewer than 3 vertices")
        else:
            super().__init__(f"vertex {cut_vertex} is a cut vertex")


class NotFacial(CircuitGraphError):
    pass


class BadTwoCut(CircuitGraphError):
    def __init__(self, cut: tuple[int, int], component: tuple[int, ...]):
        self.cut = cut
        self.component = component
        super().__init__(
            f"component {list(component)} of G - {set(cut)} misses the outer cycle"
        )


def _rotates_to(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    a, b = list(a), list(b)
    return any(b[i:] + b[:i] == a for i in range(len(b))) if b else True


def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if two cyclic sequences agree up to rotation and reflection."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    a = list(a)
    for seq in (list(b), list(reversed(b))):
        for i in range(len(seq)):
            if seq[i:] + seq[:i] == a:
                return True
    return False


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]
    outer: int | None
    dart_face: dict[Dart, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.faces)

    def interior(self) -> list[tuple[int, ...]]:
        return [f for i, f in enumerate(self.faces) if i != self.outer]


@dataclass(frozen=True)
class PlaneGraph:
    """Simple connected plane graph on vertices ``0..n-1``.

    ``labels`` is provenance only: when a graph is cut out of a larger one,
    ``labels[v]`` is the label of ``v`` in the host.  It is not part of the
    PLG serialization and does not take part in equality.
    """

    n: int
    rotation: tuple[tuple[int, ...], ...]
    outer: tuple[int, ...] | None = None
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        if self.outer is not None:
            object.__setattr__(self, "outer", tuple(self.outer))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        _check_rotation(self.n, self.rotation)
        faces = self.faces
        if self.n - self.e + len(faces) != 2:
            raise NotPlanarEmbedding(
                f"rotation system has genus > 0 (v - e + f = {self.n - self.e + len(faces)})"
            )
        if self.outer is not None and faces.outer is None:
            raise OuterNotFace(f"outer walk {list(self.outer)} is not a face")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.rotation[u]) if u < v)

    @property
    def e(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    def succ(self, v: int, u: int) -> int:
        """Clockwise successor of ``u`` in the rotation at ``v``."""
        r = self.rotation[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def pred(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][u] - 1) % len(r)]

    @cached_property
    def faces(self) -> FaceSet:
        return trace_faces(self)

    def outer_face(self) -> tuple[int, ...] | None:
        if self.faces.outer is None:
            return None
        return self.faces.faces[self.faces.outer]

    def host(self, v: int) -> int:
        return self.labels[v]

    def with_outer(self, outer: Sequence[int] | None) -> PlaneGraph:
        return PlaneGraph(self.n, self.rotation, None if outer is None else tuple(outer), self.labels)


def _check_rotation(n: int, rotation: Sequence[Sequence[int]]) -> None:
    if n < 1:
        raise MalformedPlg("graph needs at least one vertex")
    if len(rotation) != n:
        raise MalformedPlg(f"expected {n} rotations, got {len(rotation)}")
    for v, r in enumerate(rotation):
        seen = set()
        for w in r:
            if not 0 <= w < n:
                raise LabelOutOfRange(f"label out of range: {w} (n={n})", vertex=v)
            if w == v:
                raise SelfLoop(f"vertex {v} lists itself", vertex=v)
            if w in seen:
                raise RepeatedNeighbor(f"vertex {v} lists {w} twice", vertex=v)
            seen.add(w)
    sets = [set(r) for r in rotation]
    for v in range(n):
        for w in rotation[v]:
            if v not in sets[w]:
                raise AsymmetricAdjacency(f"{v} lists {w} but {w} does not list {v}", vertex=v)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in rotation[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise DisconnectedGraph(f"vertex {missing} is not reachable from 0", vertex=missing)


def trace_faces(g: PlaneGraph) -> FaceSet:
    """Trace every face of ``g``.

    Each face walk starts at its lexicographically smallest dart and faces are
    listed in order of that dart, so the result depends only on ``g``.
    """
    if g.n == 1:
        return FaceSet(((0,),), 0 if g.outer is not None else None, {})
    darts = sorted((u, v) for u in range(g.n) for v in g.rotation[u])
    dart_face: dict[Dart, int] = {}
    faces = []
    for start in darts:
        if start in dart_face:
            continue
        idx = len(faces)
        walk = []
        u, v = start
        while (u, v) not in dart_face:
            dart_face[(u, v)] = idx
            walk.append(u)
            u, v = v, g.succ(v, u)
        faces.append(tuple(walk))
    outer = None
    if g.outer is not None:
        # an exact cyclic match wins over a reflected one (a cycle's two faces
        # are reflections of each other)
        for i, f in enumerate(faces):
            if _rotates_to(f, g.outer):
                outer = i
                break
        else:
            for i, f in enumerate(faces):
                if same_cycle(f, g.outer):
                    outer = i
                    break
    return FaceSet(tuple(faces), outer, dart_face)


def face_darts(face: Sequence[int]) -> list[Dart]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


# ---------------------------------------------------------------------------
# PLG text format
# ---------------------------------------------------------------------------

_ROT_LINE = re.compile(r"^(\d+)\s*:\s*((?:\d+\s*)*)$")


def _normalized_lines(text: str | bytes) -> list[tuple[int, str]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedPlg(f"non-ASCII input ({exc.reason})") from None
    out = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, " ".join(line.split())))
    return out


def normalize_plg(text: str | bytes) -> str:
    """Comment-free, whitespace-collapsed form of a PLG file."""
    lines = [line for _, line in _normalized_lines(text)]
    fixed = []
    for line in lines:
        m = _ROT_LINE.match(line)
        if m:
            nbrs = m.group(2).split()
            line = f"{m.group(1)}:" + "".join(f" {w}" for w in nbrs)
        elif line.startswith("outer"):
            head, _, rest = line.partition(":")
            line = "outer:" + "".join(f" {w}" for w in rest.split())
        elif line.startswith("n"):
            line = line.replace(" ", "")
        fixed.append(line)
    return "\n".join(fixed) + "\n"


def parse_plg(text: str | bytes) -> PlaneGraph:
    lines = _normalized_lines(text)
    if not lines or lines[0][1] != "PLG 1":
        raise MalformedPlg("missing 'PLG 1' header", line=lines[0][0] if lines else 1)
    if len(lines) < 2:
        raise MalformedPlg("missing 'n=<int>' line", line=lines[0][0])
    lineno, head = lines[1]
    m = re.fullmatch(r"n\s*=\s*(\d+)", head)
    if not m:
        raise MalformedPlg(f"bad vertex-count line {head!r}", line=lineno)
    n = int(m.group(1))
    if n < 1:
        raise MalformedPlg("n must be positive", line=lineno)
    body = lines[2:]
    if len(body) < n:
        raise MalformedPlg(f"expected {n} rotation lines, got {len(body)}",
                           line=body[-1][0] if body else lineno)
    rotation = []
    line_of = {}
    for v in range(n):
        lineno, line = body[v]
        m = _ROT_LINE.match(line)
        if not m:
            raise MalformedPlg(f"bad rotation line {line!r}", line=lineno)
        if int(m.group(1)) != v:
            raise MalformedPlg(f"expected rotation of vertex {v}, got {m.group(1)}", line=lineno)
        rotation.append(tuple(int(w) for w in m.group(2).split()))
        line_of[v] = lineno
    outer = None
    rest = body[n:]
    if rest:
        lineno, line = rest[0]
        key, sep, vals = line.partition(":")
        if key.strip() != "outer" or not sep or len(rest) > 1:
            raise MalformedPlg(f"unexpected trailing line {line!r}", line=lineno)
        try:
            outer = tuple(int(w) for w in vals.split())
        except ValueError:
            raise MalformedPlg(f"bad outer line {line!r}", line=lineno) from None
        for w in outer:
            if not 0 <= w < n:
                raise LabelOutOfRange(f"label out of range: {w} (n={n})", line=lineno)
        line_of["outer"] = lineno
    try:
        return PlaneGraph(n, tuple(rotation), outer)
    except OuterNotFace as exc:
        raise OuterNotFace(exc.detail, line=line_of["outer"]) from None
    except EmbeddingError as exc:
        where = line_of.get(exc.vertex, lines[1][0])
        raise type(exc)(exc.detail, vertex=exc.vertex, line=where) from None


def serialize_plg(g: PlaneGraph) -> str:
    out = ["PLG 1", f"n={g.n}"]
    for v, r in enumerate(g.rotation):
        out.append(f"{v}:" + "".join(f" {w}" for w in r))
    if g.outer is not None:
        out.append("outer:" + "".join(f" {w}" for w in g.outer))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Construction helpers
# ---------------------------------------------------------------------------


def rotation_from_faces(n: int, faces: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Rebuild rotations from consistently oriented face walks.

    A walk ``... u, v, w ...`` means ``succ_v(u) == w``.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for f in faces:
        k = len(f)
        for i in range(k):
            u, v, w = f[i - 1], f[i], f[(i + 1) % k]
            succ[v][u] = w
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append(())
            continue
        start = min(succ[v])
        order = [start]
        w = succ[v][start]
        while w != start:
            order.append(w)
            w = succ[v][w]
        if len(order) != len(succ[v]):
            raise NotPlanarEmbedding(f"faces do not close up around vertex {v}", vertex=v)
        rotation.append(tuple(order))
    return rotation


def subgraph(
    g: PlaneGraph,
    vertices: Iterable[int],
    edges: Iterable[tuple[int, int]] | None = None,
    outer: Sequence[int] | None = None,
) -> PlaneGraph:
    """Restrict ``g`` to a vertex set (and optionally an edge set).

    Vertices are relabelled in increasing order; ``labels`` of the result
    points back to the labels of ``g``'s own host.  ``outer`` is given in
    ``g``'s labels.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    allowed = None if edges is None else {frozenset(e) for e in edges}
    rotation = []
    for v in keep:
        r = []
        for w in g.rotation[v]:
            if w in index and (allowed is None or frozenset((v, w)) in allowed):
                r.append(index[w])
        rotation.append(tuple(r))
    new_outer = None if outer is None else tuple(index[v] for v in outer)
    return PlaneGraph(len(keep), tuple(rotation), new_outer, tuple(g.labels[v] for v in keep))


def delete_edges(g: PlaneGraph, edges: Iterable[tuple[int, int]], outer: Sequence[int] | None = None) -> PlaneGraph:
    drop = {frozenset(e) for e in edges}
    keep = [e for e in g.edges if frozenset(e) not in drop]
    return subgraph(g, range(g.n), keep, outer)


def is_cycle(g: PlaneGraph, c: Sequence[int]) -> bool:
    if len(c) < 3 or len(set(c)) != len(c):
        return False
    return all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def cycle_edges(c: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}


# ---------------------------------------------------------------------------
# Regions, cuts, circuit graphs
# ---------------------------------------------------------------------------


def inside_faces(g: PlaneGraph, c: Sequence[int]) -> list[int]:
    """Indices of the faces on the side of cycle ``c`` away from the outer face."""
    if g.outer is None:
        raise ValueError("interior needs a designated outer face")
    if not is_cycle(g, c):
        raise NotACycle(f"{list(c)} is not a cycle of the graph")
    fs = g.faces
    border = cycle_edges(c)
    outside = {fs.outer}
    queue = deque([fs.outer])
    while queue:
        i = queue.popleft()
        for u, v in face_darts(fs.faces[i]):
            if frozenset((u, v)) in border:
                continue
            j = fs.dart_face[(v, u)]
            if j not in outside:
                outside.add(j)
                queue.append(j)
    return [i for i in range(len(fs)) if i not in outside]


def interior_of_cycle(g: PlaneGraph, c: Sequence[int]) -> PlaneGraph:
    """Subgraph on and inside ``c`` with ``c`` as its outer face."""
    fs = g.faces
    verts = set(c)
    kept = set(cycle_edges(c))
    for i in inside_faces(g, c):
        for u, v in face_darts(fs.faces[i]):
            verts.update((u, v))
            kept.add(frozenset((u, v)))
    return subgraph(g, verts, [tuple(e) for e in kept], outer=c)


def _components(adj: Sequence[Iterable[int]], removed: set[int], n: int) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def components_without(g: PlaneGraph, removed: Iterable[int]) -> list[list[int]]:
    return _components(g.adj, set(removed), g.n)


def cuts(g: PlaneGraph, size: int) -> list[tuple[int, ...]]:
    """All vertex sets of ``size`` (1 or 2) whose removal disconnects ``g``."""
    if size not in (1, 2):
        raise ValueError("cut size must be 1 or 2")
    out = []
    for s in itertools.combinations(range(g.n), size):
        if g.n - size >= 2 and len(components_without(g, s)) > 1:
            out.append(s)
    return out


def is_two_connected(g: PlaneGraph) -> bool:
    return g.n >= 3 and not cuts(g, 1)


@dataclass(frozen=True)
class CircuitGraph:
    graph: PlaneGraph
    outer_cycle: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def m(self) -> int:
        return deficiency_m(self)


def validate_circuit_graph(g: PlaneGraph, c: Sequence[int] | None = None) -> CircuitGraph:
    """Certify ``(g, c)`` as a circuit graph or say which clause fails.

    ``c`` defaults to ``g.outer``.
    """
    if c is None:
        if g.outer is None:
            raise NotFacial("no outer cycle given")
        c = g.outer
    c = tuple(c)
    if g.n < 3:
        raise NotTwoConnected(None)
    one = cuts(g, 1)
    if one:
        raise NotTwoConnected(one[0][0])
    if not is_cycle(g, c):
        raise NotACycle(f"{list(c)} is not a cycle of the graph")
    if not any(same_cycle(f, c) for f in g.faces.faces):
        raise NotFacial(f"{list(c)} does not bound a face")
    on_c = set(c)
    for s in cuts(g, 2):
        for comp in components_without(g, s):
            if on_c.isdisjoint(comp):
                raise BadTwoCut(s, tuple(comp))
    return CircuitGraph(g.with_outer(c), c)


def deficiency_m(cg: CircuitGraph) -> int:
    """Number of interior edges missing from a near triangulation."""
    g = cg.graph
    m = 3 * g.n - 6 - g.e - (len(cg.outer_cycle) - 3)
    by_faces = sum(len(f) - 3 for f in g.faces.interior())
    assert m == by_faces, f"deficiency {m} disagrees with face count {by_faces}"
    return m


def is_near_triangulation(g: PlaneGraph) -> bool:
    """Every face except the designated outer one is a triangle."""
    if g.outer is None or g.faces.outer is None:
        raise ValueError("near triangulation test needs an outer face")
    return all(len(f) == 3 for f in g.faces.interior())
