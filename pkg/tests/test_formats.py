import pytest
from hypothesis import given, settings

from conftest import graphs, hypergraphs
from welldom.core import Graph, Hypergraph, cycle_graph
from welldom.formats import (
    FormatError,
    parse_graph,
    parse_hypergraph,
    parse_instance,
    write_graph,
    write_hypergraph,
)


def test_graph_round_trip_is_sorted():
    G = Graph.from_edges(3, [(2, 1), (1, 0)], ["x", "y", "z"])
    text = write_graph(G)
    assert text == "p graph 3 2\ne 0 1\ne 1 2\nl 0 x\nl 1 y\nl 2 z\n"
    assert parse_graph(text) == G


def test_hypergraph_members_follow_universe_order():
    H = Hypergraph.from_sets([["c", "a"], ["b"]], universe=["a", "b", "c"])
    assert write_hypergraph(H) == "p hyper 3 2\na b c\na c\nb\n"


def test_hypergraph_with_empty_universe_and_family():
    H = Hypergraph((), ())
    assert parse_hypergraph(write_hypergraph(H)) == H


def test_element_named_c_is_not_a_comment():
    text = "c a comment\np hyper 2 1\nc d\nc d\n"
    H = parse_hypergraph(text)
    assert H.universe == ("c", "d") and H.sets == (frozenset({"c", "d"}),)


def test_parse_instance_dispatches():
    assert isinstance(parse_instance(write_graph(cycle_graph(4))), Graph)
    assert isinstance(parse_instance("p hyper 1 1\na\na\n"), Hypergraph)
    with pytest.raises(FormatError):
        parse_instance("hello\n")


@pytest.mark.parametrize("text", [
    "p graph 2 2\ne 0 1\n",
    "p graph 2 1\ne 0 x\n",
    "p graph 2 1\ne 0 1\nq 1\n",
    "p graph 2 1\ne 0 1\nl 0 a\n",
])
def test_bad_graph_files(text):
    with pytest.raises(FormatError):
        parse_graph(text)


@pytest.mark.parametrize("text", [
    "p hyper 2 1\na\na\n",
    "p hyper 1 2\na\na\n",
    "p graph 1 0\n",
])
def test_bad_hypergraph_files(text):
    with pytest.raises(FormatError):
        parse_hypergraph(text)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_graph_write_is_deterministic(G):
    text = write_graph(G)
    assert parse_graph(text) == G
    assert write_graph(parse_graph(text)) == text


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_hypergraph_write_is_deterministic(H):
    text = write_hypergraph(H)
    again = parse_hypergraph(text)
    assert again.universe == H.universe and again.sets == H.sets
    assert write_hypergraph(again) == text
