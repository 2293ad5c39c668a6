"""Canonical forms for small graphs.

The canonical form is the minimum upper-triangle adjacency code over all
vertex orders reachable by individualisation and equitable refinement of the
degree partition.  Interchangeable twins (vertices whose neighbourhoods agree
apart from each other) are branched on once, since swapping them is an
automorphism that fixes the current partition.  Graphs are bitmask adjacency
lists: bit ``w`` of ``adj[v]`` is set iff ``vw`` is an edge.
"""

from __future__ import annotations

from typing import Sequence

Adj = Sequence[int]


def to_masks(adj: Sequence[Sequence[int]]) -> list[int]:
    out = []
    for nbrs in adj:
        m = 0
        for w in nbrs:
            m |= 1 << w
        out.append(m)
    return out


def from_masks(adj: Adj) -> list[list[int]]:
    n = len(adj)
    return [[w for w in range(n) if adj[v] >> w & 1] for v in range(n)]


def _refine(adj: Adj, cells: list[list[int]]) -> list[list[int]]:
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new
                break
        else:
            return cells


def code(adj: Adj, order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of ``adj`` relabelled by ``order``."""
    n = len(order)
    c = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            c = (c << 1) | (row >> order[j] & 1)
    return c


def canonical_order(adj: Adj) -> tuple[int, ...]:
    """Vertex order realising the canonical code (``order[i]`` gets label i)."""
    n = len(adj)
    if n == 0:
        return ()
    twins = [
        [(adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for v in range(n)] for u in range(n)
    ]
    best_code = None
    best_order: tuple[int, ...] = ()

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            c = code(adj, order)
            if best_code is None or c < best_code:
                best_code, best_order = c, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(twins[u][v] for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search([list(range(n))])
    return best_order


def canonical_form(adj: Adj) -> tuple[int, int]:
    """``(n, code)``; equal exactly for isomorphic graphs."""
    return len(adj), code(adj, canonical_order(adj))


def relabel(adj: Adj, order: Sequence[int]) -> list[int]:
    """Adjacency of the graph whose vertex i is ``order[i]`` of ``adj``."""
    inv = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        m = 0
        row = adj[v]
        for w, i in inv.items():
            if row >> w & 1:
                m |= 1 << i
        out.append(m)
    return out
