"""Constructive extraction of large near triangulations from circuit graphs.

Given a circuit graph ``(G, C)`` and ``t >= 4`` with

    (3t - 7) * m(G) < v(G) - (t - 1),

:func:`find_near_triangulation` returns a near-triangulation subgraph on at
least ``t`` vertices.  It repeatedly takes an interior non-triangular face
``F`` and replaces ``G`` by a smaller circuit graph that still satisfies the
inequality, until the deficiency is zero:

A  ``F`` meets ``C`` in two or more pieces: split along ``F`` into the
   circuit graphs bounded by ``x_i C x_(i+1)`` and ``x_i F x_(i+1)``.
B  ``F`` meets ``C`` in a path with an edge: delete that path.
C  ``F`` meets ``C`` in one vertex ``x``: drop one of the two edge fans at
   ``x`` if that leaves a circuit graph, otherwise split ``G`` into the block
   of ``G - x`` carrying ``F`` and the two regions on either side.
D  ``F`` is disjoint from ``C``: cut the region between ``C`` and ``F``
   along two disjoint paths, shrink one side until it is a near
   triangulation, and either return it or delete it.

Whenever several pieces qualify, the one maximising
``(v - (t-1)) / m`` is kept.  Every step is recorded in the trace and must
lower ``m``; anything unexpected raises :class:`InternalInvariantBroken`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .budget import Budget, tick
from .embedding import (
    CircuitGraph,
    CircuitGraphError,
    NotTwoConnected,
    PlaneGraph,
    cycle_edges,
    delete_edges,
    face_darts,
    inside_faces,
    interior_of_cycle,
    is_cycle,
    is_near_triangulation,
    same_cycle,
    subgraph,
    validate_circuit_graph,
)
from .planarity import blocks


class PreconditionViolated(ValueError):
    def __init__(self, m: int, v: int, t: int, reason: str):
        self.m, self.v, self.t = m, v, t
        super().__init__(f"m={m}, v={v}, t={t}: {reason}")


class InternalInvariantBroken(AssertionError):
    pass


@dataclass(frozen=True)
class NtWitness:
    subgraph: PlaneGraph
    embedding_map: tuple[int, ...]  # host label of each subgraph vertex

    @property
    def n(self) -> int:
        return self.subgraph.n


@dataclass(frozen=True)
class TraceStep:
    case: str  # "A", "B", "C" or "D"
    face: tuple[int, ...]  # host labels
    m_before: int
    m_after: int
    v_after: int
    note: str = ""

    def __str__(self) -> str:
        face = " ".join(map(str, self.face))
        line = f"{self.case} face=[{face}] m={self.m_before}->{self.m_after} v={self.v_after}"
        return f"{line} {self.note}" if self.note else line


@dataclass
class ExtractTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def monotone(self) -> bool:
        return all(s.m_after < s.m_before for s in self.steps) and all(
            a.m_after == b.m_before for a, b in zip(self.steps, self.steps[1:])
        )


def precondition_holds(cg: CircuitGraph, t: int) -> bool:
    return t >= 4 and cg.n >= t and (3 * t - 7) * cg.m < cg.n - (t - 1)


def check_precondition(cg: CircuitGraph, t: int) -> None:
    m, v = cg.m, cg.n
    if t < 4:
        raise PreconditionViolated(m, v, t, "t must be at least 4")
    if v < t:
        raise PreconditionViolated(m, v, t, f"v={v} < t={t}")
    if not (3 * t - 7) * m < v - (t - 1):
        raise PreconditionViolated(
            m, v, t, f"(3t-7)*m = {(3 * t - 7) * m} is not < v-(t-1) = {v - (t - 1)}"
        )


def witness_from(g: PlaneGraph) -> NtWitness:
    return NtWitness(g, g.labels)


def validate_witness(host: PlaneGraph, w: NtWitness, t: int) -> bool:
    """Image is a subgraph of ``host``, interior faces are triangles, v >= t."""
    sub = w.subgraph
    if sub.n < t or sub.outer is None or not is_near_triangulation(sub):
        return False
    if len(set(w.embedding_map)) != sub.n:
        return False
    return all(host.has_edge(w.embedding_map[a], w.embedding_map[b]) for a, b in sub.edges)


# ---------------------------------------------------------------------------
# small path helpers on a cyclic vertex sequence
# ---------------------------------------------------------------------------


def _forward(cycle: Sequence[int], a: int, b: int) -> list[int]:
    """Walk ``cycle`` in its stored direction from ``a`` to ``b``."""
    k = len(cycle)
    i = cycle.index(a)
    out = [a]
    while out[-1] != b:
        i = (i + 1) % k
        out.append(cycle[i])
    return out


def _arcs(cycle: Sequence[int], a: int, b: int) -> tuple[list[int], list[int]]:
    """Both a-b paths along ``cycle``."""
    return _forward(cycle, a, b), _forward(list(reversed(cycle)), a, b)


def _close(*paths: Sequence[int]) -> list[int]:
    """Concatenate paths that share consecutive endpoints into a cycle."""
    out = list(paths[0])
    for p in paths[1:]:
        assert out[-1] == p[0]
        out.extend(p[1:])
    assert out[0] == out[-1]
    return out[:-1]


def _face_index(g: PlaneGraph, face: Sequence[int]) -> int:
    return g.faces.dart_face[(face[0], face[1])]


def _ratio(cg: CircuitGraph, t: int) -> Fraction:
    return Fraction(cg.n - (t - 1), cg.m)


def _host_face(g: PlaneGraph, face: Sequence[int]) -> tuple[int, ...]:
    return tuple(g.labels[v] for v in face)


class _Extractor:
    def __init__(self, t: int, budget: Budget | None):
        self.t = t
        self.budget = budget
        self.trace = ExtractTrace()

    # -- piece handling ----------------------------------------------------

    def piece(self, g: PlaneGraph, cycle: Sequence[int]) -> CircuitGraph:
        sub = interior_of_cycle(g, cycle)
        try:
            return validate_circuit_graph(sub, sub.outer)
        except CircuitGraphError as exc:
            raise InternalInvariantBroken(f"piece bounded by {list(cycle)} is not a circuit graph: {exc}")

    def choose(self, pieces: list[CircuitGraph]) -> tuple[CircuitGraph, bool]:
        """Pick the piece to continue with; the flag says it is already done."""
        big = [p for p in pieces if p.n >= self.t]
        if not big:
            raise InternalInvariantBroken("no piece has t vertices")
        for p in big:
            if p.m == 0:
                return p, True
        best = max(big, key=lambda p: _ratio(p, self.t))  # max keeps the first on ties
        return best, False

    def record(self, case: str, g: PlaneGraph, face, before: int, nxt: CircuitGraph, note: str = ""):
        self.trace.steps.append(TraceStep(case, _host_face(g, face), before, nxt.m, nxt.n, note))

    def ensure_progress(self, before: CircuitGraph, nxt: CircuitGraph, done: bool) -> None:
        if nxt.m >= before.m:
            raise InternalInvariantBroken(f"deficiency did not drop ({before.m} -> {nxt.m})")
        if not done and not precondition_holds(nxt, self.t):
            raise InternalInvariantBroken(
                f"next graph violates the threshold (m={nxt.m}, v={nxt.n}, t={self.t})"
            )

    # -- face selection ------------------------------------------------------

    def pick_face(self, cg: CircuitGraph) -> tuple[int, ...]:
        g = cg.graph
        on_c = set(cg.outer_cycle)

        def key(f):
            contact = len(on_c.intersection(f))
            i = f.index(min(f))
            canon = min(tuple(f[i:] + f[:i]), tuple(reversed(f[i + 1 :] + f[: i + 1])))
            return (0 if contact else 1, contact, len(f), canon)

        return min((f for f in g.faces.interior() if len(f) > 3), key=key)

    # -- main loop -------------------------------------------------------------

    def run(self, cg: CircuitGraph) -> NtWitness:
        # fresh labels so the witness maps into this graph, not into its own host
        g0 = cg.graph
        cg = _traced(CircuitGraph(PlaneGraph(g0.n, g0.rotation, g0.outer), cg.outer_cycle))
        while cg.m > 0:
            tick(self.budget)
            face = self.pick_face(cg)
            g = cg.graph
            c = cg.outer_cycle
            shared_v = set(face) & set(c)
            shared_e = cycle_edges(face) & cycle_edges(c)
            ncomp = _count_components(shared_v, shared_e)
            if ncomp >= 2:
                nxt, done = self.case_a(cg, face)
            elif shared_e:
                nxt, done = self.case_b(cg, face, shared_e)
            elif shared_v:
                nxt, done = self.case_c(cg, face, next(iter(shared_v)))
            else:
                nxt, done = self.case_d(cg, face)
            self.ensure_progress(cg, nxt, done)
            cg = _traced(nxt)
            if done:
                break
        w = witness_from(cg.graph)
        if w.n < self.t or not is_near_triangulation(cg.graph):
            raise InternalInvariantBroken("final graph is not a large near triangulation")
        return w

    # -- case A --------------------------------------------------------------

    def case_a(self, cg: CircuitGraph, face):
        g, c = cg.graph, cg.outer_cycle
        fi = _face_index(g, face)
        contacts = [v for v in c if v in set(face)]
        s = len(contacts)
        pieces = []
        for i in range(s):
            a, b = contacts[i], contacts[(i + 1) % s]
            cpath = _forward(c, a, b)
            chosen = None
            for fpath in _arcs(face, a, b):
                if any(v in contacts for v in fpath[1:-1]):
                    continue
                if len(cpath) == 2 and len(fpath) == 2:
                    chosen = "edge"
                    break
                cyc = _close(cpath, list(reversed(fpath)))
                if is_cycle(g, cyc) and fi not in inside_faces(g, cyc):
                    chosen = cyc
                    break
            if chosen is None:
                raise InternalInvariantBroken(f"no piece between contacts {a} and {b}")
            if chosen != "edge":
                pieces.append(self.piece(g, chosen))
        nxt, done = self.choose(pieces)
        self.record("A", g, face, cg.m, nxt, f"pieces={len(pieces)}")
        return nxt, done

    # -- case B --------------------------------------------------------------

    def case_b(self, cg: CircuitGraph, face, shared_e):
        g, c = cg.graph, cg.outer_cycle
        deg: dict[int, int] = {}
        for e in shared_e:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        ends = [v for v, d in deg.items() if d == 1]
        if len(ends) != 2:
            raise InternalInvariantBroken("face meets the outer cycle in a closed walk")
        a, b = ends
        fwd, back = _arcs(c, a, b)
        path, other = (fwd, back) if _path_edges(fwd) <= shared_e else (back, fwd)
        if _path_edges(path) != shared_e:
            raise InternalInvariantBroken("shared edges do not form an arc of the outer cycle")
        inner = path[1:-1]
        f_rest = next(p for p in _arcs(face, a, b) if _path_edges(p) != shared_e)
        c_rest = list(reversed(other))  # b ... a
        new_outer = _close(c_rest, f_rest)
        if inner:
            keep = [v for v in range(g.n) if v not in set(inner)]
            h = subgraph(g, keep, outer=new_outer)
        else:
            h = delete_edges(g, [(a, b)], outer=new_outer)
        try:
            nxt = validate_circuit_graph(h, h.outer)
        except CircuitGraphError as exc:
            raise InternalInvariantBroken(f"deleting the shared path broke the circuit graph: {exc}")
        self.record("B", g, face, cg.m, nxt, f"deleted={len(inner) or 'edge'}")
        return nxt, False

    # -- case C --------------------------------------------------------------

    def case_c(self, cg: CircuitGraph, face, x: int):
        g, c = cg.graph, cg.outer_cycle
        fs = g.faces
        outer = fs.faces[fs.outer]
        i = outer.index(x)
        a, b = outer[i - 1], outer[(i + 1) % len(outer)]  # outer angle at x runs a -> b
        j = face.index(x)
        fc, fd = face[j - 1], face[(j + 1) % len(face)]  # angle of F at x runs fc -> fd
        rot = [b]
        while rot[-1] != a:
            rot.append(g.succ(x, rot[-1]))
        cut = rot.index(fc)
        if rot[cut + 1] != fd:
            raise InternalInvariantBroken("face angle is not inside the rotation at x")
        fan_y = rot[: cut + 1]  # y_1 = b ... y_s = fc
        fan_z = rot[cut + 1 :]  # z_1 = fd ... z_r = a
        notes = []
        for name, fan, dart in (("Y", fan_y, (a, x)), ("Z", fan_z, (x, b))):
            h = delete_edges(g, [(x, w) for w in fan])
            outer_h = h.faces.faces[h.faces.dart_face[dart]]
            try:
                nxt = validate_circuit_graph(h.with_outer(outer_h), outer_h)
            except NotTwoConnected:
                continue
            except CircuitGraphError as exc:
                notes.append(f"G-{name} 2-connected but not circuit ({exc})")
                continue
            self.record("C", g, face, cg.m, nxt, f"fan={name}" + ("; " + "; ".join(notes) if notes else ""))
            return nxt, False
        return self.case_c_split(cg, face, x, a, b, fc, fd, notes)

    def case_c_split(self, cg, face, x, a, b, fc, fd, notes):
        g, c = cg.graph, cg.outer_cycle
        adj_minus = [[w for w in g.rotation[v] if w != x] if v != x else [] for v in range(g.n)]
        path_edges = _path_edges(_forward(face, fd, fc))
        block = None
        for comp in blocks(g.n, adj_minus):
            es = {frozenset(e) for e in comp}
            if path_edges <= es:
                block = comp
                break
        if block is None:
            raise InternalInvariantBroken("F - x is not inside a single block of G - x")
        bverts = sorted({v for e in block for v in e})
        bset = set(bverts)
        bsub = subgraph(g, bverts, block)
        # face of the block containing the angle at fc where x sat
        w_prev = g.pred(fc, x)
        while w_prev not in bset:
            w_prev = g.pred(fc, w_prev)
        loc = {v: i for i, v in enumerate(bverts)}
        bface = bsub.faces.faces[bsub.faces.dart_face[(loc[w_prev], loc[fc])]]
        c_b = [bverts[i] for i in bface]
        if not is_cycle(g, c_b) or fd not in c_b:
            raise InternalInvariantBroken("block boundary around x is not a cycle through F")
        v1 = next(v for v in _walk_from(c, x, b) if v in bset)
        v2 = next(v for v in _walk_from(c, x, a) if v in bset)
        if v1 == v2:
            raise InternalInvariantBroken("both sides of x reach the block at one vertex")
        c_to_v1 = _walk_until(c, x, b, v1)
        c_to_v2 = _walk_until(c, x, a, v2)
        b_to_fc = next(p for p in _arcs(c_b, v1, fc) if fd not in p)
        b_to_fd = next(p for p in _arcs(c_b, v2, fd) if fc not in p)
        c1 = _close(c_to_v1, b_to_fc, [fc, x])
        c2 = _close(c_to_v2, b_to_fd, [fd, x])
        # a side piece bounded by two parallel x-fc edges is empty (the edge xb = x fc)
        pieces = [self.piece(g, cyc) for cyc in (c1, c2) if len(cyc) >= 3]
        pieces.append(self.piece(g, c_b))
        if sum(p.m for p in pieces) + len(face) - 3 != cg.m:
            raise InternalInvariantBroken("deficiency does not split over the three regions")
        nxt, done = self.choose(pieces)
        self.record("C", g, face, cg.m, nxt, "; ".join(["split"] + notes))
        return nxt, done

    # -- case D --------------------------------------------------------------

    def case_d(self, cg: CircuitGraph, face):
        g, c = cg.graph, cg.outer_cycle
        fi = _face_index(g, face)
        found = _disjoint_paths(g, set(c), set(face), set(c) | set(face), None)
        if found is None:
            raise InternalInvariantBroken("no two disjoint paths from the outer cycle to F")
        p1, p2 = found  # each runs C -> F
        x1, y1, x2, y2 = p1[0], p1[-1], p2[0], p2[-1]
        options = []
        for carc in _arcs(c, x2, x1):
            for farc in _arcs(face, y1, y2):
                cyc = _close(p1, farc, list(reversed(p2)), carc)
                if is_cycle(g, cyc):
                    inside = inside_faces(g, cyc)
                    if fi not in inside:
                        options.append((len(inside), cyc, carc, farc))
        if not options:
            raise InternalInvariantBroken("paths do not cut the region around F")
        options.sort(key=lambda o: o[0])
        _, c_f, carc, farc = options[0]
        seg = list(reversed(carc))  # x1 ... x2 along C
        cur_face, cur_fi = list(face), fi
        inside = set(inside_faces(g, c_f))
        rounds = 0
        while True:
            tick(self.budget)
            bad = [j for j in sorted(inside) if len(g.faces.faces[j]) > 3]
            if not bad:
                break
            rounds += 1
            fj = min(bad, key=lambda j: (len(g.faces.faces[j]), g.faces.faces[j]))
            f2 = list(g.faces.faces[fj])
            region_edges = set(cycle_edges(c_f))
            for j in inside:
                region_edges |= {frozenset(d) for d in face_darts(g.faces.faces[j])}
            q = _disjoint_paths(g, set(f2), set(c_f), set(f2) | set(c_f), region_edges)
            if q is None:
                raise InternalInvariantBroken("cannot reach the new face from the region boundary")
            q1, q2 = q
            # arc of C_F from x1 to x2 that avoids the C segment
            a_arc = _close(p1, farc, list(reversed(p2)), list(reversed(seg)))
            a_arc = _forward(a_arc, x1, x2)
            seg_set = set(seg)
            ext = []
            ends = [q1[-1], q2[-1]]
            pos = [a_arc.index(z) if z not in seg_set else None for z in ends]
            for k, z in enumerate(ends):
                if pos[k] is None:
                    ext.append([z])
                    continue
                other = ends[1 - k]
                if pos[1 - k] is not None:
                    to_x1 = pos[k] < pos[1 - k]
                else:
                    to_x1 = other != x1
                ext.append(list(reversed(a_arc[: pos[k] + 1])) if to_x1 else a_arc[pos[k] :])
            new_paths = []
            for qi, ei in zip((q1, q2), ext):
                full = qi + ei[1:]
                start = max(i for i, v in enumerate(full) if v in set(f2))
                full = full[start:]
                end = next(i for i, v in enumerate(full) if v in seg_set)
                new_paths.append(list(reversed(full[: end + 1])))  # S -> F'
            n1, n2 = new_paths
            if seg.index(n1[0]) > seg.index(n2[0]):
                n1, n2 = n2, n1
            sub_seg = seg[seg.index(n1[0]) : seg.index(n2[0]) + 1]
            chosen = None
            for farc2 in _arcs(f2, n1[-1], n2[-1]):
                cyc = _close(n1, farc2, list(reversed(n2)), list(reversed(sub_seg)))
                if not is_cycle(g, cyc):
                    continue
                ins = set(inside_faces(g, cyc))
                if fj not in ins and ins < inside:
                    chosen = (cyc, farc2, ins)
                    break
            if chosen is None:
                raise InternalInvariantBroken("rerouting did not shrink the region")
            c_f, farc, inside = chosen
            p1, p2, seg = n1, n2, sub_seg
            x1, y1, x2, y2 = n1[0], n1[-1], n2[0], n2[-1]
            cur_face, cur_fi = f2, fj
        h_f = self.piece(g, c_f)
        if h_f.m != 0:
            raise InternalInvariantBroken("shrunk region is not a near triangulation")
        note = f"reroutes={rounds} v(H_F)={h_f.n}"
        if h_f.n >= self.t:
            self.record("D", g, cur_face, cg.m, h_f, note + " returned")
            return h_f, True
        other_f = next(p for p in _arcs(cur_face, y1, y2) if _path_edges(p) != _path_edges(farc))
        other_c = next(p for p in _arcs(c, x2, x1) if _path_edges(p) != _path_edges(list(reversed(seg))))
        c_rest = _close(p1, other_f, list(reversed(p2)), other_c)
        nxt = self.piece(g, c_rest)
        if cur_fi in inside_faces(g, c_rest):
            raise InternalInvariantBroken("remaining region still contains the face")
        self.record("D", g, cur_face, cg.m, nxt, note)
        return nxt, False


def _traced(cg: CircuitGraph) -> CircuitGraph:
    """Same circuit graph with the outer cycle stored as its traced face walk."""
    walk = cg.graph.outer_face()
    return CircuitGraph(cg.graph.with_outer(walk), walk)


def _path_edges(path: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset((path[i], path[i + 1])) for i in range(len(path) - 1)}


def _walk_from(cycle: Sequence[int], start: int, first: int) -> list[int]:
    """Vertices of ``cycle`` after ``start``, walking through ``first`` first."""
    k = len(cycle)
    i = cycle.index(start)
    step = 1 if cycle[(i + 1) % k] == first else -1
    return [cycle[(i + step * j) % k] for j in range(1, k)]


def _walk_until(cycle: Sequence[int], start: int, first: int, stop: int) -> list[int]:
    out = [start]
    for v in _walk_from(cycle, start, first):
        out.append(v)
        if v == stop:
            return out
    raise InternalInvariantBroken(f"{stop} is not on the cycle")


def _count_components(verts: set[int], edges: set[frozenset[int]]) -> int:
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        a, b = tuple(e)
        parent[find(a)] = find(b)
    return len({find(v) for v in verts})


def _disjoint_paths(g: PlaneGraph, sources: set[int], targets: set[int], blocked: set[int],
                    allowed_edges: set[frozenset[int]] | None):
    """Two vertex-disjoint source->target paths whose inner vertices avoid ``blocked``.

    A vertex in both sets is a path on its own.  Unit-capacity augmenting
    paths on the vertex-split graph; neighbours are scanned in sorted order.
    """
    # node ids: (v, 0) = in, (v, 1) = out
    cap: dict = {}

    def add(u, v):
        cap.setdefault(u, {})
        cap.setdefault(v, {})
        cap[u][v] = cap[u].get(v, 0) + 1
        cap[v].setdefault(u, 0)

    S, T = ("S",), ("T",)
    for v in range(g.n):
        add((v, 0), (v, 1))
    for s in sorted(sources):
        add(S, (s, 0))
    for t in sorted(targets):
        add((t, 1), T)
    for u, v in g.edges:
        if allowed_edges is not None and frozenset((u, v)) not in allowed_edges:
            continue
        for a, b in ((u, v), (v, u)):
            # leave a only from a source or a free vertex; enter b only if it is
            # a target or a free vertex
            if a in blocked and a not in sources:
                continue
            if a in targets and a not in sources:
                continue
            if b in blocked and b not in targets:
                continue
            if b in sources and b not in targets:
                continue
            add((a, 1), (b, 0))
    flow = 0
    while flow < 2:
        prev = {S: None}
        queue = deque([S])
        while queue and T not in prev:
            u = queue.popleft()
            for v in sorted(cap[u], key=repr):
                if cap[u][v] > 0 and v not in prev:
                    prev[v] = u
                    queue.append(v)
        if T not in prev:
            return None
        v = T
        while prev[v] is not None:
            u = prev[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    # decompose: follow saturated original arcs
    paths = []
    used_out = set()
    for s in sorted(sources):
        if cap[S].get((s, 0), 1) != 0:
            continue
        path = [s]
        node = (s, 1)
        while True:
            nxt = None
            for v in sorted(cap[node], key=repr):
                # an arc node->v carries flow iff its reverse residual is positive
                if v != T and (v[1] != 0 or v[0] == node[0]):
                    continue
                if cap[v].get(node, 0) > 0 and (node, v) not in used_out:
                    nxt = v
                    break
            if nxt is None:
                raise InternalInvariantBroken("flow decomposition failed")
            used_out.add((node, nxt))
            if nxt == T:
                break
            path.append(nxt[0])
            node = (nxt[0], 1)
        paths.append(path)
    if len(paths) != 2:
        raise InternalInvariantBroken("flow decomposition failed")
    return paths[0], paths[1]


def find_near_triangulation(cg: CircuitGraph, t: int, budget: Budget | None = None
                            ) -> tuple[NtWitness, ExtractTrace]:
    """Near-triangulation subgraph on at least ``t`` vertices.

    Raises :class:`PreconditionViolated` unless ``t >= 4``, ``v >= t`` and
    ``(3t-7) m < v - (t-1)``.
    """
    check_precondition(cg, t)
    ex = _Extractor(t, budget)
    w = ex.run(cg)
    return w, ex.trace


def oracle_near_triangulation(g: PlaneGraph, t: int, budget: Budget | None = None) -> NtWitness | None:
    """Brute force: some cycle whose interior is a near triangulation on >= t vertices.

    Cycles are walked in both directions.  Every face just to the right of the
    walk must be an interior triangle, so paths breaking that are cut early;
    each closed cycle is then checked by flooding its inside.
    """
    if g.outer is None:
        raise ValueError("oracle needs a designated outer face")
    fs = g.faces
    good = {d for d, j in fs.dart_face.items() if j != fs.outer and len(fs.faces[j]) == 3}
    adj = g.adj
    for r in range(g.n):
        path = [r]
        on_path = {r}

        def extend(v: int) -> NtWitness | None:
            tick(budget)
            if len(path) >= 3 and (v, r) in good and r in adj[v]:
                w = _check_interior(g, path, t)
                if w is not None:
                    return w
            for w in sorted(adj[v]):
                if w <= r or w in on_path or (v, w) not in good:
                    continue
                path.append(w)
                on_path.add(w)
                found = extend(w)
                path.pop()
                on_path.discard(w)
                if found is not None:
                    return found
            return None

        found = extend(r)
        if found is not None:
            return found
    return None


def _check_interior(g: PlaneGraph, cyc: Sequence[int], t: int) -> NtWitness | None:
    fs = g.faces
    inside = inside_faces(g, cyc)
    if any(len(fs.faces[j]) != 3 for j in inside):
        return None
    verts = set(cyc)
    for j in inside:
        verts.update(fs.faces[j])
    if len(verts) < t:
        return None
    return witness_from(interior_of_cycle(g, cyc))
