"""Exact Maker-Breaker domination game solver with a criticality classifier
and a census harness for the published characterisations."""

from .canon import canonical_form, canonical_id, enumerate_connected, enumerate_graphs, is_isomorphic
from .criticality import ClassificationRecord, classify, is_critical, mb_invariants
from .graph import Graph, GraphError, from_edges
from .graph6 import Graph6Error, decode, encode
from .solver import INF, Player, Position, Solver, game_value, game_value_bruteforce, optimal_moves

__version__ = "0.1.0"

__all__ = [
    "INF", "ClassificationRecord", "Graph", "Graph6Error", "GraphError", "Player", "Position",
    "Solver", "canonical_form", "canonical_id", "classify", "decode", "encode",
    "enumerate_connected", "enumerate_graphs", "from_edges", "game_value",
    "game_value_bruteforce", "is_critical", "is_isomorphic", "mb_invariants", "optimal_moves",
]
