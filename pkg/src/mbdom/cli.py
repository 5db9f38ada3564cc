"""Command-line entry point.

Exit codes: 0 success, 1 violations or mismatches found, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import verifier
from .canon import ENUM_MAX_ORDER, enumerate_connected
from .criticality import classify
from .families import FamilyError, build, family_membership, parse_spec, roles
from .graph import Graph, GraphError, iter_bits
from .graph6 import Graph6Error, decode, encode, parse_edge_list
from .solver import (Player, Solver, Status, game_value_bruteforce, make_position,
                     terminal_status, format_value)

ORACLE_EXHAUSTIVE_MAX = 5


class UsageError(Exception):
    pass


def _graph_from_args(args) -> Graph:
    if getattr(args, "g6", None) is not None:
        return decode(args.g6)
    try:
        text = Path(args.edges).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {args.edges}: {err.strerror}") from None
    return parse_edge_list(text)


def _add_graph_input(p, edges=True):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="LINE", help="graph in graph6 format")
    if edges:
        group.add_argument("--edges", metavar="FILE", help='edge list file: "n" then "u v" lines')


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _invariant_name(first: Player) -> str:
    return "gamma'_MB" if first is Player.STALLER else "gamma_MB"


def format_transcript(line: list[tuple[Player, int]]) -> str:
    counts = {Player.STALLER: 0, Player.DOMINATOR: 0}
    parts = []
    for who, v in line:
        counts[who] += 1
        parts.append(f"{who.value[0]}{counts[who]}={v}")
    return ", ".join(parts)


# ----------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    G = _graph_from_args(args)
    X = 0
    for v in _vertex_list(args.predominated or ""):
        if not 0 <= v < G.n:
            raise UsageError(f"predominated vertex {v} out of range 0..{G.n - 1}")
        X |= 1 << v
    first = Player.parse(args.game)
    solver = Solver(G)
    line, value = solver.principal_line(make_position(G, X, first))
    print(f"{_invariant_name(first)} = {format_value(value)}")
    print(f"transcript: {format_transcript(line)}")
    return 0


def cmd_classify(args) -> int:
    record = classify(_graph_from_args(args))
    print(json.dumps(record.to_json(), indent=2))
    return 0


def _write_reports(report: verifier.CensusReport, out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(report.dumps())
    (out / "criticals.jsonl").write_text(report.criticals_jsonl())
    (out / "violations.txt").write_text(report.violations_table())
    (out / "violations.json").write_text(
        json.dumps([vars(v) for v in report.violations], indent=2) + "\n")


def cmd_census(args) -> int:
    checks = verifier.parse_checks(args.checks)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.builtin is not None:
        n = args.builtin
        if not 1 <= n <= ENUM_MAX_ORDER:
            raise UsageError(f"--builtin supports orders 1..{ENUM_MAX_ORDER}")
        if n == ENUM_MAX_ORDER and not args.slow:
            raise UsageError(f"order {n} is the slow census; pass --slow")
        source = verifier.builtin_source(n, connected_only=not args.all_graphs)
        label = f"builtin({n})" + (" all graphs" if args.all_graphs else "")
    else:
        path = Path(args.file)
        if not path.is_file():
            raise UsageError(f"cannot read {path}")
        source = verifier.file_source(str(path))
        label = f"graph6 file {path.name}"
    report = verifier.run_census(source, checks, label=label, jobs=args.jobs, seed=args.seed)
    if args.out:
        _write_reports(report, Path(args.out))
    print(f"{report.total} graphs, {len(report.critical_list)} connected 2-critical, "
          f"{len(report.violations)} violations")
    for rec in report.critical_list:
        print(f"  critical {rec.canonical_id}")
    if report.violations:
        sys.stdout.write(report.violations_table())
    return 0 if report.ok else 1


def cmd_family(args) -> int:
    if args.action == "gen":
        spec = parse_spec(args.spec)
        G = build(spec)
        print(encode(G))
        print(json.dumps(roles(spec)))
        return 0
    G = decode(args.g6)
    for kind, member in family_membership(G).items():
        print(f"{kind}: {'yes' if member else 'no'}")
    return 0


def cmd_verify(args) -> int:
    if args.check not in verifier.CHECKS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(verifier.CHECKS)}")
    if not 1 <= args.nmax <= ENUM_MAX_ORDER:
        raise UsageError(f"--nmax must be between 1 and {ENUM_MAX_ORDER}")
    report = verifier.run_verify(args.check, args.nmax, seed=args.seed, jobs=args.jobs)
    print(f"{args.check}: {report.total} graphs of order 1..{args.nmax}, "
          f"{len(report.violations)} violations (seed {args.seed})")
    if report.violations:
        sys.stdout.write(report.violations_table())
    return 0 if report.ok else 1


def oracle_diff(nmax: int, samples: int, seed: int) -> tuple[int, int]:
    """``(comparisons, mismatches)`` between the solver and the brute-force oracle."""
    compared = mismatched = 0
    rng = random.Random(seed)
    for n in range(1, nmax + 1):
        graphs = list(enumerate_connected(n))
        if n > ORACLE_EXHAUSTIVE_MAX:
            graphs = [graphs[rng.randrange(len(graphs))] for _ in range(samples)]
        for G in graphs:
            solver = Solver(G)
            for first in (Player.DOMINATOR, Player.STALLER):
                fast = solver.game_value(0, first)
                slow = game_value_bruteforce(G, 0, first)
                compared += 1
                if fast != slow:
                    mismatched += 1
                    print(f"mismatch {encode(G)} {first.value} first: "
                          f"solver {format_value(fast)}, oracle {format_value(slow)}")
    return compared, mismatched


def cmd_oracle_diff(args) -> int:
    if not 1 <= args.nmax <= ENUM_MAX_ORDER:
        raise UsageError(f"--nmax {args.nmax} unsupported; use 1..{ENUM_MAX_ORDER}")
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    compared, mismatched = oracle_diff(args.nmax, args.samples, args.seed)
    print(f"{compared} comparisons, {mismatched} mismatches")
    return 0 if mismatched == 0 else 1


def _ask(prompt: str, stdin) -> str:
    print(prompt, end="", flush=True)
    line = stdin.readline()
    if not line:
        raise EOFError
    return line.strip()


def cmd_play(args, stdin=None) -> int:
    stdin = stdin or sys.stdin
    G = decode(args.g6)
    human = Player.parse(args.as_)
    p = make_position(G, 0, Player.parse(args.first))
    solver = Solver(G)
    line = []
    print(f"{G.n} vertices, {_invariant_name(p.turn)} = {format_value(solver.position_value(p))}")
    while terminal_status(p) is Status.ONGOING:
        if p.turn is human:
            try:
                raw = _ask(f"{human.value} move (free: {' '.join(map(str, iter_bits(p.available)))}): ",
                           stdin)
            except EOFError:
                print("\ninput ended")
                return 2
            try:
                v = int(raw)
            except ValueError:
                print(f"not a vertex: {raw!r}")
                continue
            if not 0 <= v < G.n or not p.available >> v & 1:
                print(f"vertex {v} is not available")
                continue
        else:
            v = next(iter_bits(solver.optimal_moves(p)))
            print(f"{p.turn.value} plays {v}")
        line.append((p.turn, v))
        p = p.play(v)
    moves = sum(1 for who, _ in line if who is Player.DOMINATOR)
    if terminal_status(p) is Status.DOMINATOR_WON:
        print(f"dominator wins with {moves} moves")
    else:
        print(f"staller wins; dominator made {moves} moves")
    transcript = format_transcript(line)
    print(f"transcript: {transcript}")
    if args.save:
        Path(args.save).write_text(transcript + "\n")
    return 0


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mbdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="value and an optimal line of play")
    p.add_argument("--game", choices=["d", "s"], required=True, help="who moves first")
    p.add_argument("--predominated", metavar="V1,V2,...", help="vertices treated as dominated")
    _add_graph_input(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="invariants, criticality and family flags as JSON")
    _add_graph_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify a corpus and run checks")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", type=int, metavar="N", help="all connected graphs of order N")
    src.add_argument("--file", metavar="PATH", help="graph6 file, one graph per line")
    p.add_argument("--checks", default="all", metavar="LIST", help="comma-separated names or 'all'")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.add_argument("--out", metavar="DIR", help="write report.json, criticals.jsonl, violations.*")
    p.add_argument("--slow", action="store_true", help="allow the order-7 census")
    p.add_argument("--all-graphs", action="store_true", help="with --builtin, include disconnected graphs")
    p.add_argument("--seed", type=int, default=verifier.DEFAULT_SEED)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("family", help="build or recognise the critical families")
    fam = p.add_subparsers(dest="action", required=True)
    g = fam.add_parser("gen", help="graph6 line and role map for SPEC")
    g.add_argument("spec", metavar="SPEC", help='e.g. "F:2,1,2", "Fprime:2,2,2", "B:3,3", "H:4", "C5"')
    c = fam.add_parser("check", help="membership flags")
    c.add_argument("--g6", metavar="LINE", required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run one check over all graphs up to an order")
    p.add_argument("--check", required=True, metavar="NAME")
    p.add_argument("--nmax", type=int, default=6, metavar="N")
    p.add_argument("--seed", type=int, default=verifier.DEFAULT_SEED, metavar="S")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-diff", help="compare the solver with the brute-force oracle")
    p.add_argument("--nmax", type=int, required=True, metavar="N")
    p.add_argument("--samples", type=int, default=200, metavar="K", help="graphs per order above 5")
    p.add_argument("--seed", type=int, default=1, metavar="S")
    p.set_defaults(func=cmd_oracle_diff)

    p = sub.add_parser("play", help="play against the optimal engine")
    p.add_argument("--g6", metavar="LINE", required=True)
    p.add_argument("--as", dest="as_", choices=["dominator", "staller"], required=True)
    p.add_argument("--first", choices=["d", "s"], default="s", help="who moves first (default s)")
    p.add_argument("--save", metavar="FILE", help="write the transcript here")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphError, FamilyError, ValueError) as err:
        print(f"mbdom {args.command}: error: {err}", file=sys.stderr)
        return 2
