"""Exhaustive planar Turán numbers for small n.

Connected planar graphs on ``n`` vertices are generated one per isomorphism
class: all trees first (leaf by leaf), then one edge at a time.  A graph is
kept the first time its canonical form shows up, so every class is reached
from any of its spanning connected subgraphs and reported once.  Planarity
is tested only for graphs not seen before.

``ex_p`` scans the classes by descending edge count (ties by canonical code)
and stops at the first admissible graph.  Only connected graphs are
considered: every pattern handled here is a 2-connected structure or a
cycle-length condition, so joining components by a bridge never creates an
occurrence and never lowers the edge count.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .budget import Budget, tick
from .canon import canonical_order, code, from_masks, relabel
from .embedding import PlaneGraph, serialize_plg
from .patterns import Pattern, admissible
from .planarity import planar_rotation


@dataclass(frozen=True)
class EnumStats:
    visited: int  # candidate graphs built
    duplicates: int  # rejected by canonical form
    nonplanar: int  # rejected by the planarity test
    classes: int


@dataclass(frozen=True)
class Enumeration:
    n: int
    masks: tuple[tuple[int, ...], ...]  # canonically labelled, sorted by (-e, code)
    stats: EnumStats

    def graphs(self) -> list[PlaneGraph]:
        return [plane_graph(m) for m in self.masks]


def edge_count(masks: Sequence[int]) -> int:
    return sum(m.bit_count() for m in masks) // 2


def plane_graph(masks: Sequence[int]) -> PlaneGraph:
    n = len(masks)
    rot = planar_rotation(n, from_masks(masks))
    if rot is None:
        raise ValueError("graph is not planar")
    return PlaneGraph(n, rot)


_CACHE: dict[int, Enumeration] = {}


def enumerate_planar(n: int, budget: Budget | None = None) -> Enumeration:
    """One canonically labelled representative per connected planar class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n in _CACHE:
        return _CACHE[n]
    visited = duplicates = nonplanar = 0
    # trees
    level: dict[int, tuple[int, ...]] = {0: (0,)}
    for size in range(2, n + 1):
        nxt: dict[int, tuple[int, ...]] = {}
        for masks in level.values():
            for v in range(size - 1):
                tick(budget)
                visited += 1
                grown = list(masks) + [1 << v]
                grown[v] |= 1 << (size - 1)
                order = canonical_order(grown)
                canon = tuple(relabel(grown, order))
                key = code(grown, order)
                if key in nxt:
                    duplicates += 1
                else:
                    nxt[key] = canon
        level = nxt
    found: dict[int, tuple[int, ...]] = dict(level)
    rejected: set[int] = set()
    max_e = 3 * n - 6 if n >= 3 else n - 1
    for _ in range(n - 1, max_e):
        nxt = {}
        for masks in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if masks[u] >> v & 1:
                        continue
                    tick(budget)
                    visited += 1
                    grown = list(masks)
                    grown[u] |= 1 << v
                    grown[v] |= 1 << u
                    order = canonical_order(grown)
                    canon = tuple(relabel(grown, order))
                    key = code(grown, order)
                    if key in nxt or key in rejected:
                        duplicates += 1
                        continue
                    if planar_rotation(n, from_masks(canon)) is None:
                        nonplanar += 1
                        rejected.add(key)
                        continue
                    nxt[key] = canon
        found.update(nxt)
        level = nxt
        if not level:
            break
    ordered = sorted(found.items(), key=lambda kv: (-edge_count(kv[1]), kv[0]))
    result = Enumeration(
        n,
        tuple(m for _, m in ordered),
        EnumStats(visited, duplicates, nonplanar, len(ordered)),
    )
    _CACHE[n] = result
    return result


# ---------------------------------------------------------------------------
# ex_P
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    name: str
    value: Fraction | mpmath.mpf | None  # None when outside the formula's range
    satisfied: bool | None

    @property
    def status(self) -> str:
        if self.satisfied is None:
            return "n/a"
        return "yes" if self.satisfied else "no"

    def value_text(self) -> str:
        return "n/a" if self.value is None else format_number(self.value)


@dataclass(frozen=True)
class SearchReport:
    n: int
    pattern: Pattern
    max_edges: int | None  # None when no admissible connected graph exists
    witness: PlaneGraph | None
    rows: tuple[BoundRow, ...]
    stats: EnumStats
    checked: int  # length of the descending scan up to the witness

    @property
    def violations(self) -> list[BoundRow]:
        return [r for r in self.rows if r.satisfied is False]


def format_number(x) -> str:
    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
        return str(int(x))
    if isinstance(x, Fraction):
        return f"{float(x):.6f}"
    return mpmath.nstr(x, 12, strip_zeros=False)


def _admissible_chunk(args) -> int | None:
    """Index of the first admissible graph in the chunk, or None."""
    start, masks_list, pattern = args
    for i, masks in enumerate(masks_list):
        if admissible(from_masks(masks), pattern):
            return start + i
    return None


def _first_admissible(masks: Sequence[tuple[int, ...]], pattern: Pattern, jobs: int,
                      budget: Budget | None) -> tuple[int | None, int]:
    """Index of the first admissible entry and the length of the scan up to it."""
    if jobs <= 1:
        for i, m in enumerate(masks):
            tick(budget)
            if admissible(from_masks(m), pattern, budget):
                return i, i + 1
        return None, len(masks)
    # one edge-count level at a time, so the answer never depends on chunking
    i = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while i < len(masks):
            e = edge_count(masks[i])
            j = i
            while j < len(masks) and edge_count(masks[j]) == e:
                j += 1
            level = masks[i:j]
            size = max(1, math.ceil(len(level) / (4 * jobs)))
            chunks = [(i + s, level[s : s + size], pattern) for s in range(0, len(level), size)]
            hits = [h for h in pool.map(_admissible_chunk, chunks) if h is not None]
            if hits:
                return min(hits), min(hits) + 1
            i = j
    return None, len(masks)


def ex_p(n: int, pattern: Pattern, jobs: int = 1, budget: Budget | None = None) -> SearchReport:
    """Largest edge count of a connected ``pattern``-admissible planar graph on ``n`` vertices."""
    en = enumerate_planar(n, budget)
    idx, checked = _first_admissible(en.masks, pattern, jobs, budget)
    if idx is None:
        max_edges, witness = None, None
    else:
        max_edges = edge_count(en.masks[idx])
        witness = plane_graph(en.masks[idx])
    rows = tuple(bound_rows(n, pattern, max_edges))
    return SearchReport(n, pattern, max_edges, witness, rows, en.stats, checked)


# ---------------------------------------------------------------------------
# Bound formulas
# ---------------------------------------------------------------------------

mpmath.mp.dps = 50


def k_log2_3(k: int) -> Fraction | mpmath.mpf:
    """k^(log2 3); exact when k is a power of two."""
    if k > 0 and k & (k - 1) == 0:
        return Fraction(3 ** (k.bit_length() - 1))
    return mpmath.power(k, mpmath.log(3, 2))


def main_bound(n: int, k: int) -> Fraction | mpmath.mpf:
    """3n - 6 - n / (4 k^(log2 3))."""
    x = k_log2_3(k)
    if isinstance(x, Fraction):
        return Fraction(3 * n - 6) - Fraction(n) / (4 * x)
    return mpmath.mpf(3 * n - 6) - mpmath.mpf(n) / (4 * x)


def _le(e: int, bound) -> bool:
    if isinstance(bound, Fraction):
        return e <= bound
    gap = bound - e
    if abs(gap) < mpmath.mpf(10) ** -30:
        raise ArithmeticError("bound comparison too close to decide")
    return gap > 0


def bound_formulas(n: int, pattern: Pattern) -> list[tuple[str, Fraction | mpmath.mpf | None]]:
    """Named upper bounds that apply to ``pattern`` (value None: outside the stated range)."""
    k = pattern.k
    rows: list[tuple[str, Fraction | mpmath.mpf | None]] = []
    if n >= 3:
        rows.append(("planar 3n-6", Fraction(3 * n - 6)))
    main = main_bound(n, k) if n >= 4 and k >= 4 else None
    if pattern.kind == "cycle":
        if k == 3:
            rows.append(("C3 2n-4", Fraction(2 * n - 4) if n >= 3 else None))
        if k >= 4:
            rows.append(("Ck 3n-6-n/(4k^log2(3))", main))
        if k == 4:
            rows.append(("C4 15(n-2)/7", Fraction(15 * (n - 2), 7) if n >= 4 else None))
        if k == 5:
            rows.append(("C5 (12n-33)/5", Fraction(12 * n - 33, 5) if n >= 11 else None))
        if k == 6:
            rows.append(("C6 5n/2-7", Fraction(5 * n, 2) - 7 if n >= 18 else None))
    elif pattern.kind == "theta":
        if pattern.d == 2 and k >= 4:
            rows.append(("theta_k 3n-6-n/(4k^log2(3))", main))
    else:
        if k >= 4:
            rows.append(("circ<k 3n-6-n/(4k^log2(3))", main))
        rows.append(("circ<k (k-1)(n-1)/2", Fraction((k - 1) * (n - 1), 2)))
    return rows


def bound_rows(n: int, pattern: Pattern, max_edges: int | None) -> list[BoundRow]:
    out = []
    for name, value in bound_formulas(n, pattern):
        if value is None or max_edges is None:
            out.append(BoundRow(name, value, None))
        else:
            out.append(BoundRow(name, value, _le(max_edges, value)))
    return out


_FAMILIES = {"cycle": "c", "theta": "theta", "circumference": "circ"}


def family_pattern(k: int, family: str) -> Pattern:
    if family not in _FAMILIES:
        raise ValueError(f"family must be one of {sorted(_FAMILIES)}")
    return {"cycle": Pattern("cycle", k), "theta": Pattern("theta", k), "circumference": Pattern("circ", k)}[family]


def check_bound(n: int, k: int, family: str, jobs: int = 1, budget: Budget | None = None) -> list[BoundRow]:
    return list(ex_p(n, family_pattern(k, family), jobs, budget).rows)


def bound_violations(n: int, k: int, family: str, budget: Budget | None = None) -> tuple[list[PlaneGraph], int]:
    """Every admissible connected planar graph above the main bound, and how many graphs were tested.

    Graphs at or below the bound satisfy it whatever their structure, so the
    pattern test only runs on the ones above it.
    """
    p = family_pattern(k, family)
    bound = main_bound(n, k)
    bad = []
    tested = 0
    for masks in enumerate_planar(n, budget).masks:
        e = edge_count(masks)
        if _le(e, bound):
            break  # sorted by descending edge count
        tested += 1
        if admissible(from_masks(masks), p, budget):
            bad.append(plane_graph(masks))
    return bad, tested


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

CSV_COLUMNS = ["n", "pattern", "max_edges", "witness_plg_path", "bound_name", "bound_value", "satisfied"]


def report_rows(report: SearchReport, witness_path: str) -> list[list[str]]:
    me = "none" if report.max_edges is None else str(report.max_edges)
    return [
        [str(report.n), str(report.pattern), me, witness_path, r.name, r.value_text(), r.status]
        for r in report.rows
    ]


def write_csv(rows: Iterable[Sequence[str]], header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_COLUMNS)
    w.writerows(rows)
    return buf.getvalue()


def save_report(report: SearchReport, csv_path: str, witness_path: str | None = None) -> None:
    """Write the CSV and, when there is a witness, its PLG next to it."""
    if witness_path is None and report.witness is not None:
        stem = os.path.splitext(csv_path)[0]
        witness_path = f"{stem}.witness.plg"
    if report.witness is not None:
        with open(witness_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(serialize_plg(report.witness))
    shown = witness_path if report.witness is not None else ""
    with open(csv_path, "w", encoding="ascii", newline="") as fh:
        fh.write(write_csv(report_rows(report, shown)))
