"""Shared hypothesis strategies and small oracles."""

import itertools

import networkx as nx
from hypothesis import strategies as st

from mbdom.graph import Graph, from_edges


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected and n > 1:
        # a random spanning tree first keeps the graph connected
        order = draw(st.permutations(range(n)))
        for k in range(1, n):
            parent = order[draw(st.integers(0, k - 1))]
            e = (min(parent, order[k]), max(parent, order[k]))
            if e not in chosen:
                chosen.append(e)
    return from_edges(n, chosen)


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def subset_masks(n):
    return range(1 << n)
