import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, hypergraphs, to_nx
from welldom.core import Graph, Hypergraph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from welldom.enumeration import (
    EnumerationCapError,
    NoTotalDominatingSetError,
    SolutionKind,
    UncoverableElementError,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    enumerate_solutions,
    is_solution,
)
from welldom.reductions import domination_to_hitting_set
from welldom.wellness import (
    WellProperty,
    check,
    check_well_covered,
    check_well_dominated,
    check_well_hitting_set,
    check_well_hitting_set_cover,
    check_well_set_cover,
    check_well_totally_dominated,
    verify_witness,
)


def witness_members(report):
    return tuple(w.members for w in report.witness)


def test_well_covered():
    r = check_well_covered(cycle_graph(5))
    assert r.well and r.common_size == 2
    r = check_well_covered(path_graph(3))
    assert not r.well and witness_members(r) == ((1,), (0, 2))
    r = check_well_covered(complete_graph(7))
    assert r.well and r.common_size == 1


def test_well_dominated():
    r = check_well_dominated(cycle_graph(4))
    assert r.well and r.common_size == 2
    r = check_well_dominated(path_graph(4))
    assert r.well and r.common_size == 2
    r = check_well_dominated(path_graph(3))
    assert not r.well and witness_members(r) == ((1,), (0, 2))


def test_well_totally_dominated():
    r = check_well_totally_dominated(star_graph(3))
    assert r.well and r.common_size == 2
    r = check_well_totally_dominated(complete_graph(2))
    assert r.well and r.common_size == 2
    r = check_well_totally_dominated(path_graph(5), full=True)
    assert not r.well and witness_members(r) == ((1, 2, 3), (0, 1, 3, 4))
    with pytest.raises(NoTotalDominatingSetError):
        check_well_totally_dominated(Graph.from_edges(3, [(0, 1)]))


def test_well_hitting_set():
    r = check_well_hitting_set(Hypergraph.from_sets([["a", "b"], ["c", "d"]]))
    assert r.well and r.common_size == 2
    r = check_well_hitting_set(Hypergraph.from_sets([["a", "b"], ["b", "c"]]))
    assert not r.well and witness_members(r) == (("b",), ("a", "c"))
    r = check_well_hitting_set(Hypergraph.from_sets([], universe=["a"]))
    assert r.well and r.common_size == 0


def test_well_set_cover():
    r = check_well_set_cover(Hypergraph.from_sets([["a"], ["b"], ["a", "b"]]))
    assert not r.well and sorted(len(w) for w in r.witness) == [1, 2]
    r = check_well_set_cover(Hypergraph.from_sets([["a"]]))
    assert r.well and r.common_size == 1
    r = check_well_set_cover(Hypergraph.from_sets([["a", "b"], ["c", "d"], ["a", "c"], ["b", "d"]]))
    assert r.well and r.common_size == 2


def test_well_hitting_set_cover():
    r = check_well_hitting_set_cover(domination_to_hitting_set(cycle_graph(4)))
    assert r.well and r.common_size == 2
    r = check_well_hitting_set_cover(Hypergraph.from_sets([["a"], ["b"], ["a", "b"]]))
    assert not r.well
    r = check_well_hitting_set_cover(Hypergraph.from_sets([["a"]]))
    assert r.well and r.common_size == 1
    with pytest.raises(UncoverableElementError):
        check_well_hitting_set_cover(Hypergraph.from_sets([["a"]], universe=["a", "b"]))


def test_mixed_witness_kinds():
    # the only minimal hitting set is {a,b}; the only minimal cover is {S2}
    H = Hypergraph.from_sets([["a"], ["b"], ["a", "b", "c"]])
    assert check_well_hitting_set(H).well and check_well_set_cover(H).well
    r = check_well_hitting_set_cover(H, full=True)
    assert not r.well
    assert [(w.kind, w.members) for w in r.witness] == [
        (SolutionKind.MINIMAL_SET_COVER, (2,)), (SolutionKind.MINIMAL_HITTING_SET, ("a", "b"))]
    assert verify_witness(H, r)


def test_edgeless_graphs_are_well_by_convention():
    for G in (Graph.from_edges(1, []), empty_graph(3)):
        assert check_well_dominated(G).well and check_well_dominated(G).common_size == G.n
        assert check_well_covered(G).well


def test_full_mode_picks_min_and_max():
    # star K1,4 plus a pendant path gives several sizes; the witness spans the extremes
    G = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    fam = enumerate_minimal_dominating_sets(G)
    r = check_well_dominated(G, full=True)
    assert len(r.witness[0]) == fam.sizes[0] and len(r.witness[1]) == fam.sizes[-1]
    assert r.witness[0].members == fam.solutions[0]
    assert r.solution_count == len(fam)


def test_short_circuit_examines_fewer_solutions():
    G = Graph.from_edges(8, [(0, i) for i in range(1, 8)])
    short, full = check_well_dominated(G), check_well_dominated(G, full=True)
    assert not short.well and not full.well
    assert short.solution_count <= full.solution_count


def test_records():
    assert check_well_dominated(cycle_graph(4)).record() == "well-dominated well 2 - -"
    assert check_well_dominated(path_graph(3)).record() == "well-dominated not-well 1,2 {1} {0,2}"
    assert check_well_hitting_set(Hypergraph.from_sets([["a", "b"], ["b", "c"]])).record() == \
        "well-hitting-set not-well 1,2 {b} {a,c}"
    assert "size 2" in check_well_dominated(cycle_graph(4)).describe()


def test_cap_and_kind_errors():
    with pytest.raises(EnumerationCapError):
        check_well_dominated(path_graph(30))
    with pytest.raises(ValueError):
        check(path_graph(3), "well-hitting-set")
    with pytest.raises(ValueError):
        check(path_graph(3), "well-something")


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_graph_checkers_agree_with_oracle(G):
    for prop, kind in [(WellProperty.WELL_COVERED, SolutionKind.MAXIMAL_INDEPENDENT_SET),
                       (WellProperty.WELL_DOMINATED, SolutionKind.MINIMAL_DOMINATING_SET),
                       (WellProperty.WELL_TOTAL_DOMINATED, SolutionKind.MINIMAL_TOTAL_DOMINATING_SET)]:
        if kind is SolutionKind.MINIMAL_TOTAL_DOMINATING_SET and G.isolated_vertices():
            continue
        sizes = set(enumerate_solutions(G, kind, engine="scan").sizes)
        for full in (False, True):
            r = check(G, prop, full=full)
            assert r.well == (len(sizes) == 1)
            assert verify_witness(G, r)
            if r.well:
                assert {r.common_size} == sizes


@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_hypergraph_certificates_are_sound(H):
    props = [WellProperty.WELL_HITTING_SET]
    if not H.uncoverable_elements():
        props += [WellProperty.WELL_SET_COVER, WellProperty.WELL_HITTING_SET_COVER]
    for prop in props:
        for full in (False, True):
            r = check(H, prop, full=full)
            assert verify_witness(H, r)
            if not r.well:
                a, b = r.witness
                assert len(a) < len(b)
                assert all(is_solution(H, w.kind, w.members) for w in r.witness)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_well_dominated_implies_well_covered(G):
    if check_well_dominated(G).well:
        assert check_well_covered(G).well


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_connected_bipartite_well_dominated_means_half_size(G):
    g = to_nx(G)
    if not (nx.is_connected(g) and nx.is_bipartite(g)):
        return
    sizes = set(enumerate_minimal_dominating_sets(G).sizes)
    assert check_well_dominated(G).well == (sizes == {G.n / 2})


def test_mis_sizes_bound_witnesses():
    r = check_well_covered(path_graph(5), full=True)
    fam = enumerate_maximal_independent_sets(path_graph(5))
    assert (len(r.witness[0]), len(r.witness[1])) == (fam.sizes[0], fam.sizes[-1])
