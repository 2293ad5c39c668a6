"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's search or detector code: graphs are plain
edge sets, planarity comes from networkx, and isomorphism classes are orbits
of labelled edge masks under all vertex permutations.
"""

from __future__ import annotations

import itertools

import networkx as nx


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(itertools.combinations(range(n), 2))}


def mask_edges(n: int, mask: int) -> list[tuple[int, int]]:
    return [p for p, i in pair_index(n).items() if mask >> i & 1]


def edges_mask(n: int, edges) -> int:
    idx = pair_index(n)
    m = 0
    for a, b in edges:
        m |= 1 << idx[(min(a, b), max(a, b))]
    return m


def _perm_tables(n: int):
    """For each permutation, one 256-entry image table per byte of the mask."""
    idx = pair_index(n)
    pairs = list(idx)
    nbytes = (len(pairs) + 7) // 8
    for perm in itertools.permutations(range(n)):
        img = []
        for a, b in pairs:
            x, y = perm[a], perm[b]
            img.append(1 << idx[(min(x, y), max(x, y))])
        tables = []
        for byte in range(nbytes):
            t = [0] * 256
            for v in range(1, 256):
                low = v & -v
                bit = byte * 8 + low.bit_length() - 1
                t[v] = t[v & (v - 1)] | (img[bit] if bit < len(img) else 0)
            tables.append(t)
        yield tables


def orbit_representatives(n: int) -> list[int]:
    """Least labelled mask of every isomorphism class of graphs on n vertices."""
    npairs = n * (n - 1) // 2
    total = 1 << npairs
    tables = list(_perm_tables(n))
    seen = bytearray(total)
    reps = []
    for m in range(total):
        if seen[m]:
            continue
        reps.append(m)
        for tb in tables:
            img = 0
            x = m
            for t in tb:
                img |= t[x & 0xFF]
                x >>= 8
            seen[img] = 1
    return reps


def orbit_min(n: int, edges) -> int:
    """Least mask among all relabellings of the given edge set."""
    best = None
    for perm in itertools.permutations(range(n)):
        m = edges_mask(n, [(perm[a], perm[b]) for a, b in edges])
        if best is None or m < best:
            best = m
    return best


def nx_graph(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def planar_classes(n: int, connected: bool = True) -> list[int]:
    """Orbit representatives of (connected) planar graphs on n vertices."""
    out = []
    for m in orbit_representatives(n):
        g = nx_graph(n, mask_edges(n, m))
        if connected and not nx.is_connected(g):
            continue
        if nx.check_planarity(g)[0]:
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# detectors by brute force over vertex sequences
# ---------------------------------------------------------------------------


def _adjset(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def k_cycles(n: int, edges, k: int):
    """Every k-cycle as a vertex sequence (each cycle appears 2k times)."""
    adj = _adjset(n, edges)
    for seq in itertools.permutations(range(n), k):
        if all(seq[(i + 1) % k] in adj[seq[i]] for i in range(k)):
            yield seq


def naive_has_cycle(n, edges, k) -> bool:
    return next(k_cycles(n, edges, k), None) is not None


def naive_has_theta(n, edges, k, d=2) -> bool:
    adj = _adjset(n, edges)
    for seq in k_cycles(n, edges, k):
        if seq[d] in adj[seq[0]]:
            return True
    return False


def naive_circumference(n, edges) -> int:
    best = 0
    for k in range(3, n + 1):
        if naive_has_cycle(n, edges, k):
            best = k
    return best


def naive_admissible(n, edges, kind, k, d=2) -> bool:
    if kind == "cycle":
        return not naive_has_cycle(n, edges, k)
    if kind == "theta":
        return not naive_has_theta(n, edges, k, d)
    return naive_circumference(n, edges) < k


def naive_ex(n: int, kind: str, k: int, connected: bool = True) -> int:
    best = -1
    for m in planar_classes(n, connected):
        edges = mask_edges(n, m)
        if len(edges) > best and naive_admissible(n, edges, kind, k):
            best = len(edges)
    return best
