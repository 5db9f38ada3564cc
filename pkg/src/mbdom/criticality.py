"""Maker-Breaker domination invariants, edge-criticality and per-graph records."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .canon import CANON_MAX_ORDER, canonical_id
from .families import family_membership
from .graph import (Graph, cut_vertices, delete_edge, domination_number, is_bipartite,
                    is_connected, is_triangle_free, max_degree, min_degree)
from .graph6 import encode
from .solver import INF, Player, Solver

D_GAME = Player.DOMINATOR
S_GAME = Player.STALLER


def parse_value(raw) -> int | float:
    return INF if raw == "inf" else int(raw)


def dump_value(value: int | float) -> int | str:
    return "inf" if value == INF else int(value)


def mb_invariants(G: Graph) -> tuple[int | float, int | float]:
    """``(gamma_MB, gamma'_MB)``: Dominator's move count in the D-game and the S-game."""
    solver = Solver(G)
    return solver.game_value(0, D_GAME), solver.game_value(0, S_GAME)


def exceeds(G: Graph, first: Player, k: int | float) -> bool:
    """True iff the invariant for ``first`` on G is strictly greater than k."""
    if k == INF:
        return False
    solver = Solver(G)
    return solver.capped(G.vertices, G.vertices, first, int(k)) is None


def is_critical(G: Graph, variant: Player = S_GAME,
                value: int | float | None = None) -> tuple[int | float, bool]:
    """``(k, critical)`` for the game in which ``variant`` moves first.

    Critical means k is finite and deleting any single edge pushes the
    invariant above k. An edgeless graph with finite k is vacuously critical.
    """
    k = Solver(G).game_value(0, variant) if value is None else value
    if k == INF:
        return k, False
    for e in G.edges():
        if not exceeds(delete_edge(G, e), variant, k):
            return k, False
    return k, True


def necessary_conditions(G: Graph) -> bool:
    """Order at least 5, minimum degree at least 2, no vertex of degree n-1."""
    return G.n >= 5 and min_degree(G) >= 2 and max_degree(G) <= G.n - 2


@dataclass
class ClassificationRecord:
    canonical_id: str
    n: int
    connected: bool
    bipartite: bool
    triangle_free: bool
    has_cut_vertex: bool
    gamma: int
    gamma_mb: int | float
    gamma_mb_prime: int | float
    critical_d: bool
    critical_s: bool
    family: dict[str, bool] = field(default_factory=dict)

    @property
    def two_critical(self) -> bool:
        """2-critical for the S-game invariant."""
        return self.critical_s and self.gamma_mb_prime == 2

    def to_json(self) -> dict:
        out = asdict(self)
        out["gamma_mb"] = dump_value(self.gamma_mb)
        out["gamma_mb_prime"] = dump_value(self.gamma_mb_prime)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationRecord":
        data = dict(data)
        data["gamma_mb"] = parse_value(data["gamma_mb"])
        data["gamma_mb_prime"] = parse_value(data["gamma_mb_prime"])
        return cls(**data)


def classify(G: Graph) -> ClassificationRecord:
    gamma_mb, gamma_mb_prime = mb_invariants(G)
    _, critical_d = is_critical(G, D_GAME, gamma_mb)
    _, critical_s = is_critical(G, S_GAME, gamma_mb_prime)
    cid = canonical_id(G) if G.n <= CANON_MAX_ORDER else encode(G)
    return ClassificationRecord(
        canonical_id=cid,
        n=G.n,
        connected=G.n > 0 and is_connected(G),
        bipartite=is_bipartite(G) is not None,
        triangle_free=is_triangle_free(G),
        has_cut_vertex=cut_vertices(G) != 0,
        gamma=domination_number(G),
        gamma_mb=gamma_mb,
        gamma_mb_prime=gamma_mb_prime,
        critical_d=critical_d,
        critical_s=critical_s,
        family=family_membership(G),
    )
