"""Constructive theta_k extraction from near triangulations.

Start from a cycle of length at least k and keep shrinking the set of faces
it encloses:

(a) length k with two cycle-neighbours of some vertex adjacent: done;
(b) length > k and some cycle vertex v has an enclosed facial triangle with
    its two cycle-neighbours: drop v;
(c) an enclosed facial triangle on a cycle edge uv has its apex x off the
    cycle: reroute uv through x.

Each move encloses exactly one face fewer, so at most (initial face count)
moves happen.  If none applies :class:`DichotomyViolated` is raised; on a
genuine near triangulation that is a bug.
"""

from __future__ import annotations

from .budget import Budget, tick
from .embedding import PlaneGraph, inside_faces, is_cycle, is_near_triangulation
from .patterns import ThetaWitness, circumference


class NoLongCycle(ValueError):
    pass


class DichotomyViolated(AssertionError):
    pass


def find_theta(
    g: PlaneGraph,
    k: int,
    seed: tuple[int, ...] | list[int] | None = None,
    budget: Budget | None = None,
    measures: list[int] | None = None,
) -> ThetaWitness:
    """θ_k witness in the near triangulation ``g``.

    ``seed`` defaults to a longest cycle.  When ``measures`` is given, the
    number of enclosed faces before every move is appended to it.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if g.outer is None or not is_near_triangulation(g):
        raise ValueError("find_theta needs a near triangulation with a designated outer face")
    if seed is None:
        _, seed = circumference(g, budget)
    cyc = list(seed)
    if not is_cycle(g, cyc):
        raise ValueError(f"seed {cyc} is not a cycle")
    if len(cyc) < k:
        raise NoLongCycle(f"seed has length {len(cyc)} < {k}")

    faces = g.faces.faces
    triangle_at = {frozenset(f): j for j, f in enumerate(faces) if len(f) == 3 and j != g.faces.outer}
    inside = set(inside_faces(g, cyc))
    while True:
        tick(budget)
        if measures is not None:
            measures.append(len(inside))
        n = len(cyc)
        if n == k:
            for i in sorted(range(n), key=lambda i: cyc[i]):
                u, w = cyc[i - 1], cyc[(i + 1) % n]
                if g.has_edge(u, w):
                    return ThetaWitness(tuple(cyc), (min(u, w), max(u, w)))
        nxt = None
        if n > k:
            for i in sorted(range(n), key=lambda i: cyc[i]):
                u, v, w = cyc[i - 1], cyc[i], cyc[(i + 1) % n]
                j = triangle_at.get(frozenset((u, v, w)))
                if j is not None and j in inside:
                    nxt = cyc[:i] + cyc[i + 1 :]
                    break
        if nxt is None:
            edges = sorted(
                (min(cyc[i], cyc[(i + 1) % n]), max(cyc[i], cyc[(i + 1) % n]), i) for i in range(n)
            )
            on_c = set(cyc)
            for a, b, i in edges:
                u, v = cyc[i], cyc[(i + 1) % n]
                for dart in ((u, v), (v, u)):
                    j = g.faces.dart_face[dart]
                    if j not in inside:
                        continue
                    x = next(y for y in faces[j] if y not in (u, v))
                    if x not in on_c:
                        nxt = cyc[: i + 1] + [x] + cyc[i + 1 :]
                    break
                if nxt is not None:
                    break
        if nxt is None:
            raise DichotomyViolated(f"no move applies to cycle {cyc} (k={k})")
        new_inside = set(inside_faces(g, nxt))
        if not (len(new_inside) == len(inside) - 1 and new_inside < inside):
            raise DichotomyViolated("move did not remove exactly one enclosed face")
        cyc, inside = nxt, new_inside
