"""Exact solver for the Maker-Breaker domination game.

Values are Dominator move counts: an ``int`` when Dominator wins, ``INF``
(``math.inf``) when Staller wins. ``X`` arguments are vertex masks of
predominated vertices.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import _jit
from .graph import Graph, GraphError, induced_subgraph, iter_bits, universal_vertices
from .kernels import dominator_wins

INF = math.inf


class Player(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> "Player":
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR

    @classmethod
    def parse(cls, text: str) -> "Player":
        key = text.strip().lower()
        if key in ("d", "dominator"):
            return cls.DOMINATOR
        if key in ("s", "staller"):
            return cls.STALLER
        raise ValueError(f"unknown player {text!r}")


class Status(enum.Enum):
    DOMINATOR_WON = "dominator_won"
    STALLER_WON = "staller_won"
    ONGOING = "ongoing"


@dataclass(frozen=True)
class Position:
    host: Graph
    undominated: int
    available: int
    turn: Player

    def play(self, v: int) -> "Position":
        if not self.available >> v & 1:
            raise ValueError(f"vertex {v} is not available")
        U = self.undominated
        if self.turn is Player.DOMINATOR:
            U &= ~self.host.closed(v)
        return Position(self.host, U, self.available & ~(1 << v), self.turn.other)


def make_position(G: Graph, X: int = 0, first: Player = Player.STALLER) -> Position:
    if X & ~G.vertices:
        raise GraphError("predominated set is not a subset of V(G)")
    return Position(G, G.vertices & ~X, G.vertices, first)


def terminal_status(p: Position) -> Status:
    if p.undominated == 0:
        return Status.DOMINATOR_WON
    G = p.host
    if any(G.closed(v) & p.available == 0 for v in iter_bits(p.undominated)):
        return Status.STALLER_WON
    return Status.ONGOING


class Solver:
    """Transposition-table solver bound to one graph.

    The table persists across queries on the same instance, so repeated
    value / capped / optimal-move calls reuse each other's work.
    """

    def __init__(self, G: Graph, ordered: bool = True):
        self.graph = G
        self.ordered = ordered
        self._cnb = _jit.neighborhoods([G.closed(v) for v in range(G.n)])
        self._memo = _jit.new_memo()

    def wins_within(self, U: int, A: int, turn: Player, budget: int) -> bool:
        return bool(dominator_wins(self._cnb, _jit.to_word(U), _jit.to_word(A),
                                   1 if turn is Player.DOMINATOR else 0, budget,
                                   self._memo, self.ordered))

    def capped(self, U: int, A: int, turn: Player, cap: int) -> int | None:
        if cap < 0:
            raise ValueError("cap must be non-negative")
        if not self.wins_within(U, A, turn, cap):
            return None
        for k in range(cap + 1):
            if self.wins_within(U, A, turn, k):
                return k
        raise AssertionError("unreachable")

    def value(self, U: int, A: int, turn: Player) -> int | float:
        # a budget above |A| never binds, so this first call decides the winner
        k = self.capped(U, A, turn, A.bit_count() + 1)
        return INF if k is None else k

    def position_value(self, p: Position) -> int | float:
        return self.value(p.undominated, p.available, p.turn)

    def game_value(self, X: int = 0, first: Player = Player.STALLER) -> int | float:
        p = make_position(self.graph, X, first)
        return self.position_value(p)

    def child_values(self, p: Position) -> dict[int, int | float]:
        """Value of the game after each legal move, from the mover's accounting
        (Dominator's own move is included in his count)."""
        out = {}
        for v in iter_bits(p.available):
            child = p.play(v)
            val = self.position_value(child)
            out[v] = val + 1 if p.turn is Player.DOMINATOR else val
        return out

    def optimal_moves(self, p: Position) -> int:
        if terminal_status(p) is not Status.ONGOING:
            raise ValueError("position is terminal")
        values = self.child_values(p)
        best = min(values.values()) if p.turn is Player.DOMINATOR else max(values.values())
        mask = 0
        for v, val in values.items():
            if val == best:
                mask |= 1 << v
        return mask

    def principal_line(self, p: Position) -> tuple[list[tuple[Player, int]], int | float]:
        """Both sides play their lowest-index optimal move until the game ends."""
        start = self.position_value(p)
        line = []
        while terminal_status(p) is Status.ONGOING:
            v = next(iter_bits(self.optimal_moves(p)))
            line.append((p.turn, v))
            p = p.play(v)
        return line, start


def game_value(G: Graph, X: int = 0, first: Player = Player.STALLER) -> int | float:
    return Solver(G).game_value(X, first)


def game_value_capped(G: Graph, X: int = 0, first: Player = Player.STALLER,
                      cap: int = 0) -> int | None:
    """Exact value if it is at most ``cap``, otherwise ``None``."""
    p = make_position(G, X, first)
    return Solver(G).capped(p.undominated, p.available, p.turn, cap)


def optimal_moves(p: Position) -> int:
    return Solver(p.host).optimal_moves(p)


def game_value_bruteforce(G: Graph, X: int = 0, first: Player = Player.STALLER) -> int | float:
    """Plain minimax over concrete (D, S) histories: no memo, no state
    abstraction, play continues until D dominates or no vertex is left."""
    if X & ~G.vertices:
        raise GraphError("predominated set is not a subset of V(G)")
    closed = [G.closed(v) for v in range(G.n)]
    need = G.vertices & ~X
    return _history_value(closed, need, G.vertices, 0, 0, first is Player.DOMINATOR)


def _history_value(closed, need, everything, D, S, dominator_to_move):
    covered = 0
    for d in iter_bits(D):
        covered |= closed[d]
    if need & ~covered == 0:
        return D.bit_count()
    free = everything & ~D & ~S
    if not free:
        return INF
    if dominator_to_move:
        return min(_history_value(closed, need, everything, D | 1 << v, S, False)
                   for v in iter_bits(free))
    return max(_history_value(closed, need, everything, D, S | 1 << v, True)
               for v in iter_bits(free))


def history_continuation_value(G: Graph, D: int, S: int, dominator_to_move: bool,
                               X: int = 0) -> int | float:
    """Dominator moves still needed from a concrete history (D, S)."""
    closed = [G.closed(v) for v in range(G.n)]
    total = _history_value(closed, G.vertices & ~X, G.vertices, D, S, dominator_to_move)
    return total - D.bit_count()


def pairing_bound(G: Graph, V1: int, V2: int) -> bool:
    """True when both halves of the partition induce graphs with two or more
    universal vertices; Dominator then wins the S-game within two moves by
    answering inside the two pairs."""
    if V1 & V2 or (V1 | V2) != G.vertices:
        raise GraphError("V1, V2 is not a partition of V(G)")
    for part in (V1, V2):
        sub, _ = induced_subgraph(G, part)
        if universal_vertices(sub).bit_count() < 2:
            return False
    return True


def format_value(value: int | float) -> str:
    return "inf" if value == INF else str(int(value))
