"""Domination-chain parameters and the polynomial recognizers for special classes."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, InstanceError, is_bipartite, is_connected
from .enumeration import DEFAULT_CAP, enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets
from .wellness import check_well_covered, check_well_dominated


@dataclass(frozen=True)
class ChainParameters:
    gamma: int   # domination number
    Gamma: int   # upper domination number
    iota: int    # independent domination number
    alpha: int   # independence number

    def record(self) -> str:
        return f"{self.gamma} {self.Gamma} {self.iota} {self.alpha}"


def chain_parameters(G: Graph, *, cap: int = DEFAULT_CAP) -> ChainParameters:
    dom = enumerate_minimal_dominating_sets(G, cap=cap).size_values
    mis = enumerate_maximal_independent_sets(G, cap=cap).size_values
    return ChainParameters(dom[0], dom[-1], mis[0], mis[-1])


def corona_with_K1(H: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of ``H``; pendant of ``v`` gets id ``n + v``."""
    n = H.n
    edges = list(H.edges) + [(v, n + v) for v in range(n)]
    labels = None
    if H.labels is not None:
        labels = list(H.labels) + [f"{name}'" for name in H.labels]
    return Graph.from_edges(2 * n, edges, labels)


def is_corona_with_K1(G: Graph) -> Graph | None:
    """Return the base graph ``H`` with ``G = H o K1``, or None.

    ``K2`` is read as ``K1 o K1``.
    """
    if G.n < 2 or G.n % 2:
        return None
    if G.n == 2:
        return Graph.from_edges(1, [], G.labels[:1] if G.labels else None) if G.m == 1 else None
    leaves = {v for v in range(G.n) if G.degree(v) == 1}
    if len(leaves) != G.n // 2:
        return None
    core = [v for v in range(G.n) if v not in leaves]
    for v in leaves:
        (u,) = G.adj[v]
        if u in leaves:
            return None
    for v in core:
        if len(G.adj[v] & leaves) != 1:
            return None
    base = G.induced_subgraph(core)
    if not is_connected(base):
        return None
    return base


def recognize_bipartite_well_dominated(G: Graph) -> bool:
    """Polynomial test for connected bipartite graphs: K1, C4, or a corona ``H o K1``."""
    if G.n < 1:
        raise InstanceError("the graph has no vertices")
    if not is_connected(G):
        raise InstanceError("the graph is not connected")
    if is_bipartite(G) is None:
        raise InstanceError("the graph is not bipartite")
    if G.n == 1:
        return True
    if G.n == 4 and all(G.degree(v) == 2 for v in range(4)):
        return True
    return is_corona_with_K1(G) is not None


def _very_well(G: Graph, report) -> bool:
    return report.well and 2 * report.common_size == G.n


def is_very_well_covered(G: Graph, *, cap: int = DEFAULT_CAP) -> bool:
    if G.isolated_vertices():
        raise InstanceError("very well-coveredness is defined for graphs without isolated vertices")
    return _very_well(G, check_well_covered(G, cap=cap))


def is_very_well_dominated(G: Graph, *, cap: int = DEFAULT_CAP) -> bool:
    if G.isolated_vertices():
        raise InstanceError("very well-domination is defined for graphs without isolated vertices")
    return _very_well(G, check_well_dominated(G, cap=cap))
