"""Seeded random instances. Every generator takes a ``random.Random`` so a seed fixes the output."""
from __future__ import annotations

import random
import string
import warnings

from .core import Graph, Hypergraph, is_connected


def element_names(count: int) -> list[str]:
    if count <= 26:
        return list(string.ascii_lowercase[:count])
    return [f"x{i}" for i in range(count)]


def random_hypergraph(rng: random.Random, n_elements: int, n_sets: int) -> Hypergraph:
    """Each set is drawn uniformly from the nonempty subsets of the universe."""
    if n_elements < 1 and n_sets > 0:
        raise ValueError("nonempty sets need a nonempty universe")
    names = element_names(n_elements)
    sets = []
    for _ in range(n_sets):
        mask = rng.randrange(1, 1 << n_elements)
        sets.append([x for i, x in enumerate(names) if mask >> i & 1])
    with warnings.catch_warnings():
        # repeated sets are expected under uniform sampling
        warnings.simplefilter("ignore")
        return Hypergraph.from_sets(sets, universe=names)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi G(n, p)."""
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """A random spanning tree plus G(n, p) extra edges."""
    edges = {(min(v, u), max(v, u)) for v in range(1, n) for u in [rng.randrange(v)]}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, sorted(edges))


def random_connected_bipartite_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random sides, a random spanning tree respecting them, then extra cross edges with probability ``p``."""
    if n == 1:
        return Graph.from_edges(1, [])
    while True:
        side = [rng.randrange(2) for _ in range(n)]
        if 0 < sum(side) < n:
            break
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    # grow a spanning tree by attaching each new vertex to an already placed vertex on the other side
    order = [left[0]] + [v for v in rng.sample(range(n), n) if v != left[0]]
    placed = [order[0]]
    edges = set()
    pending = order[1:]
    while pending:
        for v in list(pending):
            opposite = [u for u in placed if side[u] != side[v]]
            if opposite:
                u = rng.choice(opposite)
                edges.add((min(u, v), max(u, v)))
                placed.append(v)
                pending.remove(v)
    edges |= {(min(u, v), max(u, v)) for u in left for v in right if rng.random() < p}
    G = Graph.from_edges(n, sorted(edges))
    assert is_connected(G)
    return G
