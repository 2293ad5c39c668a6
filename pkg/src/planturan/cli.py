"""Command line entry point: ``planturan <subcommand> ...``.

Exit codes: 0 success, 2/3/4 per subcommand (see ``--help``), 64 usage,
65 unreadable or invalid input data, 74 I/O failure, 75 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from .budget import Budget, BudgetExceeded
from .constructions import figure2_fixture, kleetope, sharp_chain, substitute, tetrahedron
from .embedding import (
    CircuitGraphError,
    EmbeddingError,
    PlaneGraph,
    is_near_triangulation,
    parse_plg,
    serialize_plg,
    validate_circuit_graph,
)
from .patterns import matches, parse_pattern
from .search import CSV_COLUMNS, ex_p, save_report
from .theta_extract import NoLongCycle, find_theta
from .tri_extract import PreconditionViolated, find_near_triangulation, oracle_near_triangulation

EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74
EX_TEMPFAIL = 75


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _read_plg(path: str) -> PlaneGraph:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return parse_plg(data)
    except EmbeddingError as exc:
        raise DataError(f"{path}: {exc}") from None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _circuit(g: PlaneGraph, path: str):
    if g.outer is None:
        raise DataError(f"{path}: no 'outer:' line; a circuit graph needs its outer cycle")
    try:
        return validate_circuit_graph(g, g.outer)
    except CircuitGraphError as exc:
        raise DataError(f"{path}: not a circuit graph: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args, budget) -> int:
    c = args.construction
    if c == "figure2":
        g = figure2_fixture()
    elif c == "kleetope":
        base = _read_plg(args.host) if args.host else tetrahedron()
        try:
            g = kleetope(base, args.iterations)
        except ValueError as exc:
            raise DataError(str(exc)) from None
    elif c == "chain":
        if args.t is None:
            raise UsageError("--t is required for the chain construction")
        try:
            g = sharp_chain(args.t, args.iterations).graph
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if not args.host or not args.block:
            raise UsageError("--host and --block are required for substitute")
        host, block = _read_plg(args.host), _read_plg(args.block)
        if args.face:
            try:
                face = tuple(int(x) for x in args.face.split(","))
            except ValueError:
                raise UsageError(f"bad --face {args.face!r}; expected a,b,c") from None
        else:
            face = next((f for f in block.faces.faces if len(f) == 3), None)
            if face is None:
                raise DataError("block has no triangular face")
        try:
            g = substitute(host, block, face)
        except ValueError as exc:
            raise DataError(str(exc)) from None
    _write(args.out, serialize_plg(g))
    print(f"wrote {args.out}: v={g.n} e={g.e} f={len(g.faces)}")
    return 0


def cmd_verify(args, budget) -> int:
    g = _read_plg(args.input)
    print(f"v={g.n} e={g.e} f={len(g.faces)}")
    if g.outer is not None:
        print("outer: " + " ".join(map(str, g.outer)))
        try:
            cg = validate_circuit_graph(g, g.outer)
            print(f"circuit graph: yes (m={cg.m})")
        except CircuitGraphError as exc:
            print(f"circuit graph: no ({exc})")
        print(f"near triangulation: {'yes' if is_near_triangulation(g) else 'no'}")
    for text in args.pattern or []:
        try:
            p = parse_pattern(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        found, witness = matches(g, p, budget)
        if p.inverted:
            # circ<k>: a witness is a cycle of length >= k
            state = "holds" if found else "fails"
            extra = "" if witness is None else " long cycle: " + " ".join(map(str, witness))
            print(f"{p}: {state}{extra}")
        elif witness is None:
            print(f"{p}: absent")
        elif p.kind == "cycle":
            print(f"{p}: present cycle: " + " ".join(map(str, witness)))
        else:
            print(f"{p}: present cycle: " + " ".join(map(str, witness.cycle))
                  + f" chord: {witness.chord[0]} {witness.chord[1]}")
    return 0


def cmd_extract(args, budget) -> int:
    g = _read_plg(args.input)
    cg = _circuit(g, args.input)
    if args.oracle:
        w = oracle_near_triangulation(cg.graph, args.t, budget)
        if w is None:
            print(f"oracle: no near triangulation on >= {args.t} vertices")
            return 3
        sys.stdout.write(serialize_plg(w.subgraph))
        print("map: " + " ".join(map(str, w.embedding_map)))
        return 0
    try:
        w, trace = find_near_triangulation(cg, args.t, budget)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}")
        return 2
    sys.stdout.write(serialize_plg(w.subgraph))
    print("map: " + " ".join(map(str, w.embedding_map)))
    for step in trace:
        print(f"step {step}")
    return 0


def cmd_theta(args, budget) -> int:
    g = _read_plg(args.input)
    if g.outer is None or not is_near_triangulation(g):
        raise DataError(f"{args.input}: not a near triangulation with an outer face")
    seed = None
    if args.seed:
        try:
            seed = [int(x) for x in args.seed.split(",")]
        except ValueError:
            raise UsageError(f"bad --seed {args.seed!r}; expected comma-separated vertices") from None
    try:
        w = find_theta(g, args.k, seed, budget)
    except NoLongCycle as exc:
        print(f"no cycle of length >= {args.k}: {exc}")
        return 2
    except ValueError as exc:
        raise DataError(str(exc)) from None
    print("cycle: " + " ".join(map(str, w.cycle)))
    print(f"chord: {w.chord[0]} {w.chord[1]}")
    return 0


def cmd_search(args, budget) -> int:
    try:
        p = parse_pattern(args.pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.n < 1:
        raise UsageError("--n must be positive")
    report = ex_p(args.n, p, args.jobs, budget)
    save_report(report, args.out, args.witness)
    me = "none" if report.max_edges is None else report.max_edges
    print(f"n={report.n} pattern={p} max_edges={me} classes={report.stats.classes}")
    for row in report.rows:
        print(f"  {row.name}: {row.value_text()} {row.status}")
    if report.violations:
        print("bound violated by:")
        sys.stdout.write(serialize_plg(report.witness))
        return 4
    return 0


def cmd_report(args, budget) -> int:
    rows = []
    for path in args.inputs:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != CSV_COLUMNS:
                raise DataError(f"{path}: unexpected header {header}")
            for row in reader:
                if len(row) != len(CSV_COLUMNS):
                    raise DataError(f"{path}:{reader.line_num}: expected {len(CSV_COLUMNS)} fields")
                rows.append(row)
    cols = ["n", "pattern", "max_edges", "bound_name", "bound_value", "satisfied"]
    picked = [[r[CSV_COLUMNS.index(c)] for c in cols] for r in rows]
    widths = [max([len(c)] + [len(r[i]) for r in picked]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in picked]
    bad = sum(r[-1] == "no" for r in picked)
    lines.append(f"{len(picked)} rows, {bad} violated")
    text = "\n".join(lines) + "\n"
    if args.out:
        _write(args.out, text)
    sys.stdout.write(text)
    return 4 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="planturan", description="Planar graph workbench for planar Turán problems.")
    parser.add_argument("--max-seconds", type=float, help="wall-clock budget for exhaustive searches")
    parser.add_argument("--max-nodes", type=int, help="search-node budget for exhaustive searches")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a construction as PLG")
    p.add_argument("--construction", required=True, choices=["kleetope", "chain", "substitute", "figure2"])
    p.add_argument("--t", type=int, help="chain: target near-triangulation size")
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--host", help="kleetope base or substitution host (PLG)")
    p.add_argument("--block", help="substitution block (PLG triangulation)")
    p.add_argument("--face", help="substitution: comma-separated facial triangle of the block")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="validate a PLG file and test patterns")
    p.add_argument("--input", required=True)
    p.add_argument("--pattern", action="append", help="c<k>, theta<k>, theta<k>.<d> or circ<k>; repeatable")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="near triangulation from a circuit graph (exit 2: threshold fails, 3: oracle finds none)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--oracle", action="store_true", help="use the brute-force search instead")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("theta", help="theta_k in a near triangulation (exit 2: no cycle of length >= k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--seed", help="comma-separated seed cycle")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("search", help="exhaustive ex_P(n, pattern) with bound rows (exit 4: violation)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV path")
    p.add_argument("--witness", help="PLG path for the witness (default: next to the CSV)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="summarise search CSVs (exit 4: violation)")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 4:
        parser.error("--k must be at least 4")
    if getattr(args, "t", None) is not None and args.t < 4:
        parser.error("--t must be at least 4")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    budget = None
    if args.max_seconds is not None or args.max_nodes is not None:
        budget = Budget(args.max_nodes, args.max_seconds)
    try:
        return args.func(args, budget)
    except UsageError as exc:
        print(f"planturan: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except DataError as exc:
        print(f"planturan: {exc}", file=sys.stderr)
        return EX_DATAERR
    except BudgetExceeded as exc:
        print(f"planturan: {exc}", file=sys.stderr)
        return EX_TEMPFAIL
    except OSError as exc:
        print(f"planturan: {exc}", file=sys.stderr)
        return EX_IOERR


if __name__ == "__main__":
    sys.exit(main())
