"""Census runs and falsifiable checks of the characterisation results.

Every check takes ``(G, record, ctx)`` and returns ``None`` when the statement
holds at G, or a detail string describing the counterexample. Checks restrict
themselves to their own hypothesis class (connected, bipartite, ...), so any
check may be run on any graph.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from .canon import ENUM_MAX_ORDER, enumerate_connected, enumerate_graphs
from .criticality import (D_GAME, S_GAME, ClassificationRecord, classify, exceeds, is_critical,
                          necessary_conditions)
from .families import f_params, h2_plus_hm, h_order
from .graph import (Graph, bridges, components, cut_vertices, delete_edge, edges_between,
                    induced_subgraph, iter_bits, min_degree, universal_vertices)
from .graph6 import Graph6Error, encode, read_lines
from .solver import INF, Player, Solver, format_value, pairing_bound

DEFAULT_SEED = 20250101


@dataclass
class Context:
    seed: int = DEFAULT_SEED
    continuation_samples: int = 8


@dataclass
class Violation:
    canonical_id: str | None
    check: str
    detail: str
    graph6: str | None = None
    line: int | None = None


@dataclass
class CensusReport:
    source: str
    checks: list[str]
    seed: int
    total: int = 0
    per_order: dict[str, int] = field(default_factory=dict)
    critical_list: list[ClassificationRecord] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "checks": self.checks,
            "seed": self.seed,
            "total": self.total,
            "per_order": self.per_order,
            "critical_count": len(self.critical_list),
            "critical_list": [r.to_json() for r in self.critical_list],
            "violations": [asdict(v) for v in self.violations],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def criticals_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.critical_list)

    def violations_table(self) -> str:
        if not self.violations:
            return "no violations\n"
        rows = [("check", "graph", "line", "detail")]
        for v in self.violations:
            rows.append((v.check, v.graph6 or "-", "-" if v.line is None else str(v.line), v.detail))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        return "".join(
            f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:<{widths[2]}}  {r[3]}\n" for r in rows
        )


# ------------------------------------------------------------------ helpers

def _parts_without(G: Graph, x: int) -> list[int]:
    """Components of G - x as vertex masks of G."""
    sub, index = induced_subgraph(G, G.vertices & ~(1 << x))
    return [sum(1 << index[i] for i in iter_bits(c)) for c in components(sub)]


def _universal_in(G: Graph, S: int) -> int:
    sub, index = induced_subgraph(G, S)
    return sum(1 << index[i] for i in iter_bits(universal_vertices(sub)))


def _is_h_block(G: Graph, S: int) -> bool:
    sub, _ = induced_subgraph(G, S)
    m = h_order(sub)
    return m is not None and m >= 2


# ------------------------------------------------------------------- checks

def check_thm_bip(G, rec, ctx):
    if not (rec.connected and rec.bipartite):
        return None
    if rec.two_critical != rec.family["B"]:
        return f"bipartite: 2-critical={rec.two_critical}, in B={rec.family['B']}"
    return None


def check_thm_nok3(G, rec, ctx):
    if not (rec.connected and rec.triangle_free):
        return None
    member = rec.family["B"] or rec.family["C5"]
    if rec.two_critical != member:
        return f"triangle-free: 2-critical={rec.two_critical}, in B or C5={member}"
    return None


def check_thm_cutvertex(G, rec, ctx):
    if not (rec.connected and rec.has_cut_vertex):
        return None
    member = rec.family["F"] or rec.family["Fprime"]
    if rec.two_critical != member:
        return f"cut-vertex: 2-critical={rec.two_critical}, in F or F'={member}"
    bridge_set = set(bridges(G))
    for x in iter_bits(cut_vertices(G)):
        parts = _parts_without(G, x)
        if len(parts) != 2:
            continue
        for C1, C2 in (parts, parts[::-1]):
            U1 = _universal_in(G, C1)
            U2 = _universal_in(G, C2)
            for v1 in iter_bits(U1 & G.adj[x]):
                is_bridge = (min(v1, x), max(v1, x)) in bridge_set
                if is_bridge and G.degree(x) >= 3 and rec.two_critical:
                    return f"v1x-bridge case holds at x={x}, v1={v1} yet G is 2-critical"
                if (not is_bridge and U1.bit_count() <= U2.bit_count()
                        and rec.two_critical):
                    return f"v1x-not-bridge case holds at x={x}, v1={v1} yet G is 2-critical"
            if (rec.two_critical and (U2 & G.adj[x]).bit_count() >= 2
                    and not U1 & G.adj[x] and not member):
                return f"x adjacent to two universal vertices of C2 at x={x}, yet G not in F or F'"
    return None


def check_lemma_noleaves(G, rec, ctx):
    if G.n == 0 or min_degree(G) != 1:
        return None
    union = h2_plus_hm(G) is not None
    if rec.two_critical != union:
        return f"min degree 1: 2-critical={rec.two_critical}, H2 + Hm={union}"
    return None


def check_one_critical_hm(G, rec, ctx):
    one_critical = rec.critical_s and rec.gamma_mb_prime == 1
    m = h_order(G)
    is_h = m is not None and m >= 2
    if one_critical != is_h:
        return f"1-critical={one_critical}, isomorphic to some H_m={is_h}"
    return None


def check_prop_necessary(G, rec, ctx):
    if rec.connected and rec.two_critical and not necessary_conditions(G):
        return f"2-critical but n={G.n}, degrees={sorted(G.degrees())}"
    return None


def check_prop_family_f(G, rec, ctx):
    if rec.family["F"] and not rec.two_critical:
        return f"in F but gamma'_MB={format_value(rec.gamma_mb_prime)}, critical={rec.critical_s}"
    return None


def check_prop_family_fprime(G, rec, ctx):
    if rec.family["Fprime"] and not rec.two_critical:
        return f"in F' but gamma'_MB={format_value(rec.gamma_mb_prime)}, critical={rec.critical_s}"
    return None


def check_observation_o1(G, rec, ctx):
    if not (rec.connected and rec.two_critical):
        return None
    solver = Solver(G)
    for s in range(G.n):
        val = solver.value(G.vertices, G.vertices & ~(1 << s), Player.DOMINATOR)
        if val != 2:
            return f"Staller's first move {s} leaves value {format_value(val)}, not 2"
    return None


def continuation_pairs(n: int, count: int, rng: random.Random) -> list[tuple[int, int]]:
    """``count`` random pairs (A, B) of vertex masks with B a subset of A."""
    out = []
    for _ in range(count):
        A = rng.getrandbits(n) if n else 0
        B = A & (rng.getrandbits(n) if n else 0)
        out.append((A, B))
    return out


def check_continuation(G, rec, ctx):
    rng = random.Random(f"{ctx.seed}:{rec.canonical_id}")
    solver = Solver(G)
    for A, B in continuation_pairs(G.n, ctx.continuation_samples, rng):
        for first in (D_GAME, S_GAME):
            va = solver.game_value(A, first)
            vb = solver.game_value(B, first)
            if va > vb:
                return (f"{first.value} first: value(G|{A:#x})={format_value(va)} > "
                        f"value(G|{B:#x})={format_value(vb)}")
    return None


def check_lemma_doky(G, rec, ctx):
    for e in G.edges():
        H = delete_edge(G, e)
        for first, k in ((D_GAME, rec.gamma_mb), (S_GAME, rec.gamma_mb_prime)):
            if k == INF:
                smaller = Solver(H).game_value(0, first) != INF
            else:
                smaller = k > 0 and not exceeds(H, first, k - 1)
            if smaller:
                return f"deleting {e} lowers the {first.value}-first invariant below {format_value(k)}"
    return None


def check_lemma_multipleuniversal(G, rec, ctx):
    if not (rec.connected and rec.gamma_mb_prime == 2 and rec.has_cut_vertex):
        return None
    for x in iter_bits(cut_vertices(G)):
        parts = _parts_without(G, x)
        if len(parts) != 2:
            return f"G - {x} has {len(parts)} components"
        counts = sorted(_universal_in(G, C).bit_count() for C in parts)
        if counts[0] < 1 or counts[1] < 2:
            return f"universal vertex counts {counts} in the components of G - {x}"
    return None


def check_lemma_cut_triangle(G, rec, ctx):
    if not (rec.connected and rec.two_critical and rec.has_cut_vertex):
        return None
    for x in iter_bits(cut_vertices(G)):
        for C in _parts_without(G, x):
            if C & ~G.adj[x] or _universal_in(G, C).bit_count() < 2:
                continue
            if not _is_h_block(G, C):
                return f"component {C:#x} of G - {x} is dominated by x but is not some H_m"
    return None


def check_prop_allbridge(G, rec, ctx):
    if not (rec.connected and rec.two_critical and rec.has_cut_vertex):
        return None
    bridge_set = set(bridges(G))
    for x in iter_bits(cut_vertices(G)):
        if all((min(x, u), max(x, u)) in bridge_set for u in iter_bits(G.adj[x])):
            params = f_params(G)
            if params is None or params[1] != 1 or params[0] < 2:
                return f"all edges at {x} are bridges but F parameters are {params}"
    return None


CHECKS: dict[str, Callable] = {
    "thm_bip": check_thm_bip,
    "thm_NoK3": check_thm_nok3,
    "thm_cutvertex": check_thm_cutvertex,
    "lemma_NoLeaves": check_lemma_noleaves,
    "one_critical_Hm": check_one_critical_hm,
    "observation_o1": check_observation_o1,
    "continuation_principle": check_continuation,
    "lemma_doky": check_lemma_doky,
    "lemma_multipleuniversal": check_lemma_multipleuniversal,
    "lemma_cut_triangle": check_lemma_cut_triangle,
    "prop_necessary": check_prop_necessary,
    "prop_familyF": check_prop_family_f,
    "prop_familyFprime": check_prop_family_fprime,
    "prop_allbridge": check_prop_allbridge,
}

CHARACTERIZATIONS = ("thm_bip", "thm_NoK3", "thm_cutvertex", "lemma_NoLeaves",
                     "one_critical_Hm", "prop_necessary", "prop_familyF", "prop_familyFprime")
LEMMAS = ("lemma_multipleuniversal", "lemma_cut_triangle", "observation_o1",
          "continuation_principle", "lemma_doky", "prop_allbridge")


def parse_checks(text: str | None) -> list[str]:
    if text is None or text.strip() == "all":
        return list(CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}")
    return names


def _run_check(name: str, G: Graph, record: ClassificationRecord, ctx: Context) -> Violation | None:
    detail = CHECKS[name](G, record, ctx)
    if detail is None:
        return None
    return Violation(record.canonical_id, name, detail, encode(G))


def check_characterization(name: str, G: Graph, record: ClassificationRecord,
                           ctx: Context | None = None) -> Violation | None:
    if name not in CHARACTERIZATIONS:
        raise ValueError(f"{name} is not a characterisation check")
    return _run_check(name, G, record, ctx or Context())


def check_lemma_suite(name: str, G: Graph, record: ClassificationRecord | None = None,
                      ctx: Context | None = None) -> Violation | None:
    if name not in LEMMAS:
        raise ValueError(f"{name} is not a lemma check")
    return _run_check(name, G, record or classify(G), ctx or Context())


# ------------------------------------------------------------------- census

Item = tuple[int | None, "Graph | Graph6Error"]


def builtin_source(n: int, connected_only: bool = True) -> Iterator[Item]:
    graphs = enumerate_connected(n) if connected_only else enumerate_graphs(n)
    for G in graphs:
        yield None, G


def file_source(path: str) -> Iterator[Item]:
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from read_lines(fh)


def _evaluate(job):
    line, G, checks, ctx = job
    record = classify(G)
    found = []
    for name in checks:
        v = _run_check(name, G, record, ctx)
        if v is not None:
            v.line = line
            found.append(v)
    return record, found


def run_census(source: Iterable[Item], checks: Iterable[str], label: str = "stream",
               jobs: int = 1, seed: int = DEFAULT_SEED,
               continuation_samples: int = 8) -> CensusReport:
    """Classify every graph in ``source`` and evaluate ``checks`` on it.

    The report lists results in input order whatever ``jobs`` is.
    """
    checks = list(checks)
    ctx = Context(seed=seed, continuation_samples=continuation_samples)
    report = CensusReport(source=label, checks=checks, seed=seed)
    work = []
    for line, item in source:
        if isinstance(item, Graph6Error):
            report.violations.append(Violation(None, "decode", str(item), None, line))
            continue
        work.append((line, item, checks, ctx))

    if jobs > 1 and len(work) > 1:
        # compile the kernels once so forked workers inherit them
        Solver(Graph(2, (2, 1))).game_value()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_evaluate(job) for job in work]

    orders = Counter()
    for record, found in results:
        orders[record.n] += 1
        if record.connected and record.two_critical:
            report.critical_list.append(record)
        report.violations.extend(found)
    report.total = len(results)
    report.per_order = {str(n): orders[n] for n in sorted(orders)}
    return report


# ------------------------------------------------------- bucketed sweeps

def continuation_triples(n: int, count: int = 500, seed: int = DEFAULT_SEED
                         ) -> list[tuple[Graph, int, int]]:
    """``count`` seeded triples (G, A, B) with G of order n and B a subset of A."""
    graphs = list(enumerate_graphs(n))
    rng = random.Random(f"{seed}:order{n}")
    out = []
    for _ in range(count):
        G = graphs[rng.randrange(len(graphs))]
        (A, B), = continuation_pairs(n, 1, rng)
        out.append((G, A, B))
    return out


def continuation_violations(n: int, count: int = 500, seed: int = DEFAULT_SEED) -> list[Violation]:
    found = []
    for G, A, B in continuation_triples(n, count, seed):
        solver = Solver(G)
        for first in (D_GAME, S_GAME):
            va, vb = solver.game_value(A, first), solver.game_value(B, first)
            if va > vb:
                found.append(Violation(
                    None, "continuation_principle",
                    f"{first.value} first: value(G|{A:#x})={format_value(va)} > "
                    f"value(G|{B:#x})={format_value(vb)}", encode(G)))
    return found


def partition_violations(G: Graph) -> list[Violation]:
    """Every bipartition whose halves both carry two universal vertices must
    give an S-game value of at most 2, and G is not 2-critical when an edge
    crosses such a partition."""
    if G.n < 4:
        return []
    rest = G.vertices & ~1
    value = None
    critical = None
    found = []
    # vertex 0 stays in V1 so each unordered partition is seen once
    sub = rest
    while True:
        V1 = 1 | sub
        V2 = G.vertices & ~V1
        if V2 and pairing_bound(G, V1, V2):
            if value is None:
                value = Solver(G).game_value(0, S_GAME)
            if value > 2:
                found.append(Violation(None, "lemma_partition",
                                       f"V1={V1:#x} V2={V2:#x} but gamma'_MB={format_value(value)}",
                                       encode(G)))
            if edges_between(G, V1, V2):
                if critical is None:
                    critical = is_critical(G, S_GAME, value)[1] and value == 2
                if critical:
                    found.append(Violation(None, "lemma_partition",
                                           f"V1={V1:#x} V2={V2:#x} share an edge yet G is 2-critical",
                                           encode(G)))
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return found


def run_verify(name: str, nmax: int, seed: int = DEFAULT_SEED, jobs: int = 1,
               samples: int = 500) -> CensusReport:
    """One check over every graph (connected or not) of orders 1..nmax.

    The continuation principle additionally runs ``samples`` seeded triples
    per order.
    """
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}")
    if not 1 <= nmax <= ENUM_MAX_ORDER:
        raise ValueError(f"nmax must be between 1 and {ENUM_MAX_ORDER}")

    def source():
        for n in range(1, nmax + 1):
            yield from builtin_source(n, connected_only=False)

    report = run_census(source(), [name], label=f"all graphs of order 1..{nmax}",
                        jobs=jobs, seed=seed)
    if name == "continuation_principle":
        for n in range(1, nmax + 1):
            report.violations.extend(continuation_violations(n, samples, seed))
    return report
