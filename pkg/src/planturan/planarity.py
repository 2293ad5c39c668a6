"""Planarity testing with an embedding, by incremental face insertion.

Each biconnected block is embedded with the Demoucron-Malgrange-Pertuiset
procedure: start from a cycle, then repeatedly route a path of some fragment
(a bridge of the graph relative to the embedded part) through a face that
contains all of its attachment vertices, preferring fragments that have a
single admissible face.  Quadratic per block, which is plenty for the graph
sizes the search engine handles.  Block rotations are concatenated at cut
vertices, which places every block inside a face of its neighbour.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .embedding import PlaneGraph


def blocks(n: int, adj: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (Hopcroft-Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    out: list[list[tuple[int, int]]] = []
    stack: list[tuple[int, int]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # iterative DFS: frames of (vertex, parent, neighbour iterator)
        frames = [(root, -1, iter(sorted(adj[root])))]
        while frames:
            v, parent, it = frames[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    frames.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = []
                    while True:
                        e = stack.pop()
                        comp.append(e)
                        if e == (parent, v):
                            break
                    out.append(comp)
    return out


def _find_cycle(vertices: list[int], badj: dict[int, set[int]]) -> list[int]:
    u = vertices[0]
    v = min(badj[u])
    # shortest v -> u path avoiding the edge uv closes a cycle
    prev = {v: None}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in sorted(badj[x]):
            if (x == v and y == u) or y in prev:
                continue
            prev[y] = x
            if y == u:
                queue.clear()
                break
            queue.append(y)
    path = [u]
    x = prev[u]
    while x is not None:
        path.append(x)
        x = prev[x]
    return path  # u, ..., v ; closes with edge v-u


def _embed_block(vertices: list[int], edges: list[tuple[int, int]]) -> list[list[int]] | None:
    badj: dict[int, set[int]] = {v: set() for v in vertices}
    for a, b in edges:
        badj[a].add(b)
        badj[b].add(a)
    cycle = _find_cycle(vertices, badj)
    faces = [list(cycle), list(reversed(cycle))]
    placed_v = set(cycle)
    placed_e = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    total = len(edges)
    while len(placed_e) < total:
        fragments = []
        for a, b in sorted(edges):
            if a in placed_v and b in placed_v and frozenset((a, b)) not in placed_e:
                fragments.append(({a, b}, [a, b]))
        seen = set(placed_v)
        for s in sorted(vertices):
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in badj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            attach = {y for x in comp for y in badj[x] if y in placed_v}
            fragments.append((attach, comp))
        chosen = None
        for attach, body in fragments:
            admissible = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                return None
            if chosen is None or len(admissible) == 1:
                chosen = (attach, body, admissible[0])
                if len(admissible) == 1:
                    break
        attach, body, fi = chosen
        if isinstance(body, list):
            path = body
        else:
            path = _fragment_path(attach, body, badj)
        face = faces[fi]
        a, b = path[0], path[-1]
        i = face.index(a)
        rot = face[i:] + face[:i]
        j = rot.index(b)
        inner = path[1:-1]
        faces[fi] = rot[: j + 1] + inner[::-1]
        faces.append(rot[j:] + [a] + inner)
        placed_v.update(path)
        for k in range(len(path) - 1):
            placed_e.add(frozenset((path[k], path[k + 1])))
    return faces


def _fragment_path(attach: set[int], comp: set[int], badj: dict[int, set[int]]) -> list[int]:
    a = min(attach)
    b = min(attach - {a})
    prev: dict[int, int] = {}
    queue = deque()
    for x in sorted(badj[a] & comp):
        prev[x] = a
        queue.append(x)
    end = None
    while queue:
        x = queue.popleft()
        if b in badj[x]:
            end = x
            break
        for y in sorted(badj[x] & comp):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [b, end]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def planar_rotation(n: int, adj: Sequence[Sequence[int]]) -> list[tuple[int, ...]] | None:
    """Clockwise rotation system of a planar embedding, or None if non-planar.

    The graph must be connected.
    """
    e = sum(len(a) for a in adj) // 2
    if n >= 3 and e > 3 * n - 6:
        return None
    rotation: list[list[int]] = [[] for _ in range(n)]
    for comp in blocks(n, adj):
        verts = sorted({v for edge in comp for v in edge})
        if len(comp) == 1:
            a, b = comp[0]
            rotation[a].append(b)
            rotation[b].append(a)
            continue
        if len(comp) > 3 * len(verts) - 6:
            return None
        faces = _embed_block(verts, comp)
        if faces is None:
            return None
        succ: dict[int, dict[int, int]] = {v: {} for v in verts}
        for f in faces:
            k = len(f)
            for i in range(k):
                succ[f[i]][f[i - 1]] = f[(i + 1) % k]
        for v in verts:
            start = min(succ[v])
            order = [start]
            w = succ[v][start]
            while w != start:
                order.append(w)
                w = succ[v][w]
            rotation[v].extend(order)
    return [tuple(r) for r in rotation]


def is_planar(n: int, adj: Sequence[Sequence[int]]) -> bool:
    return planar_rotation(n, adj) is not None


def embed(n: int, edges: Sequence[tuple[int, int]], outer: Sequence[int] | None = None) -> PlaneGraph:
    """PlaneGraph for a connected planar edge list; ValueError if non-planar."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    rot = planar_rotation(n, [sorted(a) for a in adj])
    if rot is None:
        raise ValueError("graph is not planar")
    return PlaneGraph(n, rot, outer)
