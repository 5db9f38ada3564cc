"""Canonical labelling and small-order graph enumeration.

The certificate of a graph is the graph6 text (as bytes) of the relabelling
whose upper-triangle adjacency string is lexicographically least among the
orderings reachable by colour refinement plus individualisation. Twins in a
cell are interchangeable by an automorphism, so only one per twin class is
individualised.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, from_edges, iter_bits, mask_of, relabel
from .graph6 import decode, encode

CANON_MAX_ORDER = 16
ENUM_MAX_ORDER = 7


def _refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((G.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(G: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = G.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _search(G: Graph, cells: list[list[int]], best: list) -> None:
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        code = _code(G, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        if any((G.adj[v] & ~(1 << u)) == (G.adj[u] & ~(1 << v)) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        split = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(G, _refine(G, split), best)


def canonical_labeling(G: Graph) -> list[int]:
    """Ordering ``order`` such that relabelling ``order[i] -> i`` is canonical."""
    if G.n > CANON_MAX_ORDER:
        raise GraphError(f"canonical labelling supports n <= {CANON_MAX_ORDER}")
    if G.n == 0:
        return []
    best: list = [None, None]
    _search(G, _refine(G, [list(range(G.n))]), best)
    return best[1]


def canonical_graph(G: Graph) -> Graph:
    order = canonical_labeling(G)
    perm = [0] * G.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(G, perm)


def canonical_form(G: Graph) -> bytes:
    return encode(canonical_graph(G)).encode("ascii")


def canonical_id(G: Graph) -> str:
    return canonical_form(G).decode("ascii")


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


def _extend(G: Graph, nbrs: int) -> Graph:
    adj = list(G.adj)
    for u in iter_bits(nbrs):
        adj[u] |= 1 << G.n
    adj.append(nbrs)
    return Graph(G.n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _level(n: int, connected: bool) -> tuple[bytes, ...]:
    if n == 0:
        return (b"?",) if not connected else ()
    if n == 1:
        return (canonical_form(from_edges(1, [])),)
    # every connected graph has a vertex whose removal keeps it connected
    found = set()
    first = 1 if connected else 0
    for cert in _level(n - 1, connected):
        base = decode(cert.decode("ascii"))
        for nbrs in range(first, 1 << base.n):
            found.add(canonical_form(_extend(base, nbrs)))
    return tuple(sorted(found))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class of
    connected graphs on ``n`` vertices, ordered by certificate."""
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise GraphError(f"built-in enumeration supports 1 <= n <= {ENUM_MAX_ORDER}")
    for cert in _level(n, True):
        yield decode(cert.decode("ascii"))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Like :func:`enumerate_connected` but over all graphs, connected or not."""
    if not 0 <= n <= ENUM_MAX_ORDER:
        raise GraphError(f"built-in enumeration supports 0 <= n <= {ENUM_MAX_ORDER}")
    for cert in _level(n, False):
        yield decode(cert.decode("ascii"))
