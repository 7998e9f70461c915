import networkx as nx
import pytest
from hypothesis import strategies as st

from welldom.core import Graph, Hypergraph


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def hypergraphs(draw, max_elements=7, max_sets=6, min_sets=0):
    k = draw(st.integers(1, max_elements))
    names = [chr(ord("a") + i) for i in range(k)]
    sets = draw(st.lists(st.sets(st.sampled_from(names), min_size=1), min_size=min_sets, max_size=max_sets))
    return Hypergraph.from_sets([sorted(s) for s in sets], universe=names)


@pytest.fixture
def tmp_instance(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
