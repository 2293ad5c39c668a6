"""Exact detectors for cycles, theta graphs and long cycles.

All searches are exhaustive depth-first searches over simple paths.  A cycle
is reported in its canonical orientation: it starts at its smallest vertex
and its second vertex is smaller than its last.  Neighbours are always tried
in increasing order, so the first witness found is the lexicographically
smallest one in that orientation.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .budget import Budget, tick


class AcyclicGraph(ValueError):
    pass


def _adj(g) -> Sequence[frozenset[int]]:
    adj = getattr(g, "adj", None)
    if adj is not None:
        return adj
    return [frozenset(a) for a in g]


def _distances(adj, source: int, allowed) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist and allowed(w):
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def iter_cycles_of_length(g, k: int, budget: Budget | None = None) -> Iterator[tuple[int, ...]]:
    """Every k-cycle once, canonical orientation, lexicographic order."""
    adj = _adj(g)
    n = len(adj)
    if k < 3 or k > n:
        return
    for r in range(n):
        if n - r < k:
            return
        dist = _distances(adj, r, lambda w, r=r: w > r)
        path = [r]
        on_path = {r}

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            tick(budget)
            if len(path) == k:
                if r in adj[v] and path[1] < path[-1]:
                    yield tuple(path)
                return
            slack = k - len(path)  # edges still needed from the next vertex back to r
            for w in sorted(adj[v]):
                if w <= r or w in on_path or dist.get(w, n) > slack:
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend(w)
                path.pop()
                on_path.discard(w)

        yield from extend(r)


def iter_cycles(g, budget: Budget | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple cycle once (any length), canonical orientation."""
    adj = _adj(g)
    n = len(adj)
    for r in range(n):
        path = [r]
        on_path = {r}

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            tick(budget)
            if len(path) >= 3 and r in adj[v] and path[1] < path[-1]:
                yield tuple(path)
            for w in sorted(adj[v]):
                if w <= r or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend(w)
                path.pop()
                on_path.discard(w)

        yield from extend(r)


def has_cycle_of_length(g, k: int, budget: Budget | None = None) -> tuple[int, ...] | None:
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    return next(iter_cycles_of_length(g, k, budget), None)


@dataclass(frozen=True)
class ThetaWitness:
    """A k-cycle plus a chord joining two vertices at cycle distance ``d``."""

    cycle: tuple[int, ...]
    chord: tuple[int, int]

    @property
    def k(self) -> int:
        return len(self.cycle)

    @property
    def distance(self) -> int:
        i = self.cycle.index(self.chord[0])
        j = self.cycle.index(self.chord[1])
        gap = abs(i - j)
        return min(gap, len(self.cycle) - gap)


def validate_theta(g, w: ThetaWitness, k: int, d: int = 2) -> bool:
    adj = _adj(g)
    c = w.cycle
    if len(c) != k or len(set(c)) != k:
        return False
    if not all(c[(i + 1) % k] in adj[c[i]] for i in range(k)):
        return False
    u, x = w.chord
    if u not in c or x not in c or x not in adj[u]:
        return False
    return w.distance == d


def _path_of_length(adj, a: int, b: int, edges: int, banned: set[int], budget) -> list[int] | None:
    """Lexicographically first simple a-b path with exactly ``edges`` edges."""
    n = len(adj)
    dist = _distances(adj, b, lambda w: w not in banned)
    if dist.get(a, n + 1) > edges:
        return None
    path = [a]
    used = set(banned) | {a}

    def extend(v: int) -> bool:
        tick(budget)
        left = edges - (len(path) - 1)
        if left == 0:
            return v == b
        for w in sorted(adj[v]):
            if w in used or dist.get(w, n + 1) > left - 1:
                continue
            if w == b and left != 1:
                continue
            path.append(w)
            used.add(w)
            if extend(w):
                return True
            path.pop()
            used.discard(w)
        return False

    return path if extend(a) else None


def has_theta(g, k: int, d: int = 2, budget: Budget | None = None) -> ThetaWitness | None:
    """A k-cycle with a chord at cycle distance ``d``, or None."""
    if k < 4 or not 2 <= d <= k // 2:
        raise ValueError(f"need k >= 4 and 2 <= d <= k/2, got k={k}, d={d}")
    adj = _adj(g)
    n = len(adj)
    if k > n:
        return None
    if d == 2:
        # a theta_k is a triangle u-v-w plus a (k-2)-edge u..w path avoiding v
        for a in range(n):
            for b in sorted(w for w in adj[a] if w > a):
                for c in sorted(w for w in adj[a] & adj[b] if w > b):
                    for v, (u, w) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
                        path = _path_of_length(adj, u, w, k - 2, {v}, budget)
                        if path is not None:
                            cycle = (u, v, w) + tuple(reversed(path[1:-1]))
                            return ThetaWitness(cycle, (u, w))
        return None
    for cycle in iter_cycles_of_length(g, k, budget):
        if sum(len(adj[v]) >= 3 for v in cycle) < 2:
            continue
        for i in range(k):
            x, y = cycle[i], cycle[(i + d) % k]
            if y in adj[x]:
                return ThetaWitness(cycle, (x, y))
    return None


def _longest_from(adj, budget, at_least: int | None):
    """Branch and bound over cycles rooted at their smallest vertex.

    With ``at_least`` set, stop at the first cycle of that length or more.
    """
    n = len(adj)
    best_len = 0
    best: tuple[int, ...] | None = None
    for r in range(n):
        target = at_least if at_least is not None else best_len + 1
        if n - r < max(target, 3):
            break
        path = [r]
        on_path = {r}

        def reach(v: int) -> int:
            seen = {v}
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y > r and y not in seen and y not in on_path:
                        seen.add(y)
                        queue.append(y)
            return len(seen) - 1

        def extend(v: int) -> bool:
            nonlocal best_len, best
            tick(budget)
            L = len(path)
            if L >= 3 and r in adj[v] and path[1] < path[-1] and L > best_len:
                best_len, best = L, tuple(path)
                if at_least is not None and L >= at_least:
                    return True
                if L == n:
                    return True
            need = at_least if at_least is not None else best_len + 1
            if L + reach(v) < need:
                return False
            for w in sorted(adj[v]):
                if w <= r or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                done = extend(w)
                path.pop()
                on_path.discard(w)
                if done:
                    return True
            return False

        if extend(r):
            break
    return best_len, best


def circumference(g, budget: Budget | None = None) -> tuple[int, tuple[int, ...]]:
    """Length of a longest cycle and the lexicographically first such cycle."""
    length, cycle = _longest_from(_adj(g), budget, None)
    if cycle is None:
        raise AcyclicGraph("graph has no cycle")
    return length, cycle


def has_cycle_at_least(g, k: int, budget: Budget | None = None) -> tuple[int, ...] | None:
    length, cycle = _longest_from(_adj(g), budget, max(k, 3))
    return cycle if length >= k else None


def girth(g) -> int:
    adj = _adj(g)
    n = len(adj)
    best = None
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise AcyclicGraph("graph has no cycle")
    return best


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """Forbidden-substructure query.

    ``kind`` is ``"cycle"`` (exact k-cycle), ``"theta"`` (k-cycle with a chord
    at distance ``d``; ``d == 2`` is the theta_k graph) or ``"circ"``
    (circumference below k).  For ``"circ"`` the sense is inverted: a graph
    *matches* when it has no cycle of length k or more.
    """

    kind: str
    k: int
    d: int = 2

    def __post_init__(self):
        if self.kind == "cycle":
            if self.k < 3:
                raise ValueError("cycle patterns need k >= 3")
        elif self.kind == "theta":
            if self.k < 4 or not 2 <= self.d <= self.k // 2:
                raise ValueError(f"theta pattern needs k >= 4 and 2 <= d <= k/2 (k={self.k}, d={self.d})")
        elif self.kind == "circ":
            if self.k < 3:
                raise ValueError("circumference patterns need k >= 3")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "cycle":
            return f"c{self.k}"
        if self.kind == "circ":
            return f"circ{self.k}"
        return f"theta{self.k}" if self.d == 2 else f"theta{self.k}.{self.d}"

    @property
    def inverted(self) -> bool:
        return self.kind == "circ"


def ExactCycle(k: int) -> Pattern:
    return Pattern("cycle", k)


def Theta(k: int) -> Pattern:
    return Pattern("theta", k, 2)


def ThetaMember(k: int, d: int) -> Pattern:
    return Pattern("theta", k, d)


def CircumferenceLess(k: int) -> Pattern:
    return Pattern("circ", k)


_PATTERN = re.compile(r"^(?:c(\d+)|theta(\d+)(?:\.(\d+))?|circ(\d+))$")


def parse_pattern(text: str) -> Pattern:
    m = _PATTERN.match(text.strip())
    if not m:
        raise ValueError(f"bad pattern {text!r}; expected c<k>, theta<k>, theta<k>.<d> or circ<k>")
    if m.group(1):
        return ExactCycle(int(m.group(1)))
    if m.group(2):
        return ThetaMember(int(m.group(2)), int(m.group(3) or 2))
    return CircumferenceLess(int(m.group(4)))


def matches(g, p: Pattern, budget: Budget | None = None):
    """``(bool, witness)``.

    For cycle and theta patterns the witness is the found substructure.  For
    ``circ`` patterns the result is True when no cycle of length >= k exists;
    when False the witness is such a cycle.
    """
    if p.kind == "cycle":
        w = has_cycle_of_length(g, p.k, budget)
        return w is not None, w
    if p.kind == "theta":
        w = has_theta(g, p.k, p.d, budget)
        return w is not None, w
    w = has_cycle_at_least(g, p.k, budget)
    return w is None, w


def admissible(g, p: Pattern, budget: Budget | None = None) -> bool:
    """Whether ``g`` counts towards the planar Turan number of ``p``."""
    found, _ = matches(g, p, budget)
    return found if p.inverted else not found
