import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs
from mbdom.families import build_H
from mbdom.graph import (GraphError, complete, complete_bipartite, cycle, delete_edge, empty_graph, from_edges,
                         iter_bits, path)
from mbdom.solver import (INF, Player, Solver, Status, game_value, game_value_bruteforce,
                          game_value_capped, history_continuation_value, make_position,
                          optimal_moves, pairing_bound, terminal_status)

D, S = Player.DOMINATOR, Player.STALLER


@pytest.mark.parametrize("G,d_value,s_value", [
    (empty_graph(0), 0, 0),
    (complete(1), 1, INF),
    (complete(2), 1, 1),
    (cycle(5), 2, 2),
    (path(5), 2, INF),
    (cycle(4), 2, 2),
    (empty_graph(2), INF, INF),
])
def test_named_values(G, d_value, s_value):
    assert game_value(G, first=D) == d_value
    assert game_value(G, first=S) == s_value


@pytest.mark.parametrize("m", range(2, 9))
def test_h_values(m):
    assert game_value(build_H(m), first=S) == 1


def test_order_64_masks():
    G = build_H(64)
    assert game_value(G, first=S) == 1
    assert game_value(complete(64), first=D) == 1
    star = complete_bipartite(1, 63)
    assert game_value(star, first=S) == INF
    assert game_value(star, first=D) == 1


def test_player_parse():
    assert Player.parse("d") is D and Player.parse("Staller") is S
    assert D.other is S
    with pytest.raises(ValueError):
        Player.parse("x")


def test_positions():
    p = make_position(path(3), 0, S)
    assert terminal_status(p) is Status.ONGOING
    with pytest.raises(ValueError):
        p.play(1).play(1)
    with pytest.raises(GraphError):
        make_position(path(3), 0b1000)
    q = p.play(0).play(1)
    assert q.undominated == 0 and terminal_status(q) is Status.DOMINATOR_WON
    with pytest.raises(ValueError):
        optimal_moves(q)


def test_p5_staller_moves():
    p = make_position(path(5), 0, S)
    assert optimal_moves(p) == 0b01010
    line, value = Solver(path(5)).principal_line(p)
    assert value == INF and line[0] == (S, 1)


def test_pairing_bound():
    G = complete(4)
    assert pairing_bound(G, 0b0011, 0b1100)
    assert pairing_bound(cycle(4), 0b0011, 0b1100)
    assert not pairing_bound(cycle(4), 0b0101, 0b1010)
    with pytest.raises(GraphError):
        pairing_bound(G, 0b0011, 0b0110)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=6), st.integers(0, 63), st.sampled_from([D, S]))
def test_matches_bruteforce(G, X, first):
    X &= G.vertices
    assert game_value(G, X, first) == game_value_bruteforce(G, X, first)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=6), st.data())
def test_state_abstraction(G, data):
    """The value of (U, A, turn) equals the value of any concrete history leading there."""
    order = data.draw(st.permutations(range(G.n)))
    k = data.draw(st.integers(0, G.n))
    dominator_first = data.draw(st.booleans())
    Dset = Sset = 0
    turn = dominator_first
    for v in order[:k]:
        if turn:
            Dset |= 1 << v
        else:
            Sset |= 1 << v
        turn = not turn
    covered = 0
    for d in iter_bits(Dset):
        covered |= G.closed(d)
    U = G.vertices & ~covered
    A = G.vertices & ~Dset & ~Sset
    expected = history_continuation_value(G, Dset, Sset, turn)
    assert Solver(G).value(U, A, D if turn else S) == expected


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.integers(0, 255), st.integers(0, 255), st.sampled_from([D, S]))
def test_predomination_monotone(G, A, B, first):
    A &= G.vertices
    B &= A
    solver = Solver(G)
    assert solver.game_value(A, first) <= solver.game_value(B, first)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.sampled_from([D, S]))
def test_edge_deletion_monotone(G, first):
    base = game_value(G, first=first)
    for e in G.edges():
        assert base <= game_value(delete_edge(G, e), first=first)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.sampled_from([D, S]), st.integers(0, 6))
def test_capped_consistent(G, first, cap):
    value = game_value(G, first=first)
    capped = game_value_capped(G, 0, first, cap)
    assert capped == (value if value <= cap else None)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.integers(0, 511), st.sampled_from([D, S]))
def test_move_ordering_does_not_change_values(G, X, first):
    X &= G.vertices
    assert Solver(G, ordered=True).game_value(X, first) == Solver(G, ordered=False).game_value(X, first)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.sampled_from([D, S]))
def test_shared_table_is_order_independent(G, first):
    shared = Solver(G)
    warm = [shared.game_value(1 << v & G.vertices, first) for v in range(G.n)]
    cold = [Solver(G).game_value(1 << v & G.vertices, first) for v in range(G.n)]
    assert warm == cold


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7), st.sampled_from([D, S]))
def test_optimal_moves_and_principal_line(G, first):
    solver = Solver(G)
    p = make_position(G, 0, first)
    value = solver.position_value(p)
    if terminal_status(p) is Status.ONGOING:
        mask = solver.optimal_moves(p)
        assert mask
        children = solver.child_values(p)
        for v in iter_bits(mask):
            assert children[v] == value
    line, start = solver.principal_line(p)
    assert start == value
    end = p
    for _, v in line:
        end = end.play(v)
    dominator_moves = sum(1 for who, _ in line if who is D)
    if value == INF:
        assert terminal_status(end) is Status.STALLER_WON
    else:
        assert terminal_status(end) is Status.DOMINATOR_WON and dominator_moves == value


PROBE = r"""
import json, random
from mbdom import _jit
from mbdom.graph import from_edges
from mbdom.solver import Player, Solver
rng = random.Random(11)
out = []
for _ in range(40):
    n = rng.randrange(1, 11)
    G = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    s = Solver(G)
    X = rng.getrandbits(n)
    out.append([str(s.game_value(X, p)) for p in Player])
print(json.dumps({"jit": _jit.USE_NUMBA, "values": out}))
"""


def _probe(flag):
    env = dict(os.environ, MBDOM_DISABLE_JIT=flag)
    done = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True,
                          text=True, check=True)
    return json.loads(done.stdout)


def test_jit_and_fallback_agree():
    jit = _probe("0")
    plain = _probe("1")
    assert jit["jit"] is True and plain["jit"] is False
    assert jit["values"] == plain["values"]


def test_solver_on_disconnected_union():
    G = from_edges(4, [(0, 1), (2, 3)])
    assert game_value(G, first=S) == 2
