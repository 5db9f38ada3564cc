import networkx as nx
import pytest
from hypothesis import given, settings

from helpers import graphs, to_nx
from mbdom.graph import cycle, empty_graph, from_edges
from mbdom.graph6 import Graph6Error, decode, edge_list_text, encode, parse_edge_list, read_lines


def test_known_strings():
    assert encode(cycle(5)) == "Dhc"
    assert encode(empty_graph(0)) == "?"
    assert decode(">>graph6<<Dhc") == cycle(5)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_matches_networkx(G):
    text = encode(G)
    assert text == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert decode(text) == G


def test_large_order_header():
    G = from_edges(64, [(0, 63), (5, 6)])
    text = encode(G)
    assert text.startswith("~")
    assert decode(text) == G
    assert nx.from_graph6_bytes(text.encode()).number_of_edges() == 2


@pytest.mark.parametrize("bad", ["", "D!!", "Dh", "Dhcc", "~??~", "~~??????", "A`", "~?A?"])
def test_malformed(bad):
    with pytest.raises(Graph6Error) as err:
        decode(bad)
    assert "(byte" in str(err.value)


def test_order_above_64_rejected():
    with pytest.raises(Graph6Error):
        decode("~?@A" + "?" * ((65 * 64 // 2 + 5) // 6))


def test_read_lines_reports_line_numbers():
    items = list(read_lines(["Dhc\n", "\n", ">>graph6<<\n", "D!!\n", "A_\n"]))
    assert [line for line, _ in items] == [1, 4, 5]
    assert isinstance(items[1][1], Graph6Error)


def test_edge_list_round_trip():
    G = cycle(5)
    assert parse_edge_list(edge_list_text(G)) == G
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("3\n0 x\n")
