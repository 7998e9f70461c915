import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from welldom.chain import (
    chain_parameters,
    corona_with_K1,
    is_corona_with_K1,
    is_very_well_covered,
    is_very_well_dominated,
    recognize_bipartite_well_dominated,
)
from welldom.core import Graph, InstanceError, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from welldom.generate import random_connected_graph
from welldom.wellness import check_well_covered, check_well_dominated


def test_chain_parameters():
    assert chain_parameters(cycle_graph(4)).record() == "2 2 2 2"
    assert chain_parameters(path_graph(3)).record() == "1 2 1 2"
    assert chain_parameters(complete_graph(5)).record() == "1 1 1 1"


def test_recognizer_examples():
    assert recognize_bipartite_well_dominated(cycle_graph(4))
    assert recognize_bipartite_well_dominated(path_graph(4))
    assert not recognize_bipartite_well_dominated(path_graph(6))
    assert not check_well_dominated(path_graph(6)).well
    assert recognize_bipartite_well_dominated(Graph.from_edges(1, []))
    assert recognize_bipartite_well_dominated(path_graph(2))


def test_recognizer_rejects_out_of_class_input():
    with pytest.raises(InstanceError):
        recognize_bipartite_well_dominated(empty_graph(2))
    with pytest.raises(InstanceError):
        recognize_bipartite_well_dominated(complete_graph(3))


def test_is_corona():
    base = is_corona_with_K1(path_graph(4))
    assert base is not None and base.edges == ((0, 1),) and base.n == 2
    base = is_corona_with_K1(path_graph(2))
    assert base is not None and base.n == 1
    assert is_corona_with_K1(cycle_graph(4)) is None
    assert is_corona_with_K1(star_graph(3)) is None
    assert is_corona_with_K1(Graph.from_edges(4, [(0, 1), (2, 3)])) is None


def test_very_well():
    assert is_very_well_covered(cycle_graph(4))
    assert not is_very_well_covered(cycle_graph(5))
    assert is_very_well_covered(path_graph(4))
    assert is_very_well_dominated(cycle_graph(4))
    assert not is_very_well_dominated(complete_graph(3))
    assert is_very_well_dominated(path_graph(4))
    with pytest.raises(InstanceError):
        is_very_well_dominated(empty_graph(2))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_definitional_bridges(G):
    p = chain_parameters(G)
    assert check_well_dominated(G).well == (p.gamma == p.Gamma)
    assert check_well_covered(G).well == (p.iota == p.alpha)
    assert 1 <= p.gamma <= p.iota <= p.alpha <= p.Gamma


def all_connected_bipartite_graphs(max_n):
    for n in range(1, max_n + 1):
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == n and nx.is_connected(g) and nx.is_bipartite(g):
                yield Graph.from_edges(n, list(g.edges()))


def test_characterization_exhaustive_up_to_seven_vertices():
    seen = 0
    for G in all_connected_bipartite_graphs(7):
        assert recognize_bipartite_well_dominated(G) == check_well_dominated(G).well, G.edges
        seen += 1
    assert seen > 50


@pytest.mark.parametrize("seed", range(5))
def test_corona_round_trip(seed):
    rng = random.Random(seed)
    H = random_connected_graph(rng, rng.randint(1, 7), 0.3)
    G = corona_with_K1(H)
    base = is_corona_with_K1(G)
    assert base is not None
    assert nx.is_isomorphic(to_nx(base), to_nx(H))
    assert check_well_dominated(G).well and check_well_dominated(G).common_size == H.n
