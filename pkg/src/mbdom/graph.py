"""Bit-set graphs on at most 64 vertices.

A vertex set is a plain ``int`` used as a bit mask (bit ``v`` set means
vertex ``v`` is in the set). ``Graph.adj[v]`` is the open neighbourhood of
``v`` as such a mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        outside = ~full_mask(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & outside:
                raise GraphError(f"vertex {v} has a neighbour outside the graph")
            if nbrs >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & full_mask(v))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} outside 0..{G.n - 1}")


def closed_neighborhood(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return G.closed(v)


def universal_vertices(G: Graph) -> int:
    full = G.vertices
    return mask_of(v for v in range(G.n) if G.closed(v) == full)


def min_degree(G: Graph) -> int:
    return min(G.degrees(), default=0)


def max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


def delete_edge(G: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def induced_subgraph(G: Graph, S: int) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the list new -> old."""
    if S & ~G.vertices:
        raise GraphError("vertex set is not a subset of V(G)")
    index = list(iter_bits(S))
    position = {v: i for i, v in enumerate(index)}
    adj = []
    for v in index:
        adj.append(mask_of(position[u] for u in iter_bits(G.adj[v] & S)))
    return Graph(len(index), tuple(adj)), index


def remove_vertices(G: Graph, S: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(G, G.vertices & ~S)


def components(G: Graph) -> list[int]:
    """Vertex sets of the connected components, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= G.adj[u]
            frontier = grow & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def _count_components_within(G: Graph, allowed: int, adj: Sequence[int]) -> int:
    count = 0
    left = allowed
    while left:
        low = left & -left
        comp = frontier = low
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= adj[u]
            frontier = grow & allowed & ~comp
            comp |= frontier
        left &= ~comp
        count += 1
    return count


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def cut_vertices(G: Graph) -> int:
    # definitional: delete and recount
    base = len(components(G))
    cut = 0
    for v in range(G.n):
        if _count_components_within(G, G.vertices & ~(1 << v), G.adj) > base:
            cut |= 1 << v
    return cut


def bridges(G: Graph) -> list[Edge]:
    base = len(components(G))
    out = []
    for u, v in G.edges():
        adj = list(G.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if _count_components_within(G, G.vertices, adj) > base:
            out.append((u, v))
    return out


def is_bipartite(G: Graph) -> tuple[int, int] | None:
    """Two-colouring ``(V1, V2)``; each component's least vertex goes to V1."""
    side = [-1] * G.n
    for comp in components(G):
        root = next(iter_bits(comp))
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return (mask_of(v for v in range(G.n) if side[v] == 0),
            mask_of(v for v in range(G.n) if side[v] == 1))


def is_triangle_free(G: Graph) -> bool:
    return all(not (G.adj[u] & G.adj[v]) for u, v in G.edges())


def disjoint_union(G: Graph, H: Graph) -> Graph:
    if G.n + H.n > MAX_ORDER:
        raise GraphError(f"union would have {G.n + H.n} > {MAX_ORDER} vertices")
    return Graph(G.n + H.n, G.adj + tuple(a << G.n for a in H.adj))


def join(G: Graph, H: Graph) -> Graph:
    """``G ∨ H``; G keeps indices ``0..n(G)-1``, H is shifted after it."""
    if G.n + H.n > MAX_ORDER:
        raise GraphError(f"join would have {G.n + H.n} > {MAX_ORDER} vertices")
    left = full_mask(G.n)
    right = full_mask(H.n) << G.n
    adj = tuple(a | right for a in G.adj) + tuple(a << G.n | left for a in H.adj)
    return Graph(G.n + H.n, adj)


def complement(G: Graph) -> Graph:
    full = G.vertices
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("not a permutation of the vertex set")
    adj = [0] * G.n
    for v in range(G.n):
        adj[perm[v]] = mask_of(perm[u] for u in iter_bits(G.adj[v]))
    return Graph(G.n, tuple(adj))


def edges_between(G: Graph, A: int, B: int) -> list[Edge]:
    if A & B:
        raise GraphError("vertex sets overlap")
    out = []
    for u in iter_bits(A):
        for v in iter_bits(G.adj[u] & B):
            out.append((min(u, v), max(u, v)))
    return sorted(out)


def dominates(G: Graph, D: int, target: int | None = None) -> bool:
    """True if every vertex of ``target`` (default V(G)) has a closed neighbour in D."""
    covered = 0
    for v in iter_bits(D):
        covered |= G.closed(v)
    want = G.vertices if target is None else target
    return want & ~covered == 0


def minimum_dominating_sets(G: Graph) -> list[int]:
    """All dominating sets of minimum size, by increasing-cardinality search."""
    for k in range(G.n + 1):
        found = [mask_of(c) for c in combinations(range(G.n), k) if dominates(G, mask_of(c))]
        if found:
            return sorted(found)
    return []


def domination_number(G: Graph) -> int:
    for k in range(G.n + 1):
        for c in combinations(range(G.n), k):
            if dominates(G, mask_of(c)):
                return k
    return G.n


# small named graphs

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    return complement(empty_graph(n))


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return join(empty_graph(m), empty_graph(n))
