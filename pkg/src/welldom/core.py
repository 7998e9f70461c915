"""Graph and hypergraph instances plus the structural predicates used everywhere else.

Vertices are dense integer ids ``0..n-1``; optional display labels live in a
parallel tuple so gadget vertices can carry names such as ``s`` or ``v_a``.
Hypergraph elements are strings; members of a set are reported in universe
order.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Raised when a graph or hypergraph violates its structural invariants."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InstanceError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InstanceError(f"neighbor {u} of vertex {v} is out of range")
                if u == v:
                    raise InstanceError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise InstanceError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise InstanceError("labels must have one entry per vertex")
            for name in self.labels:
                _check_name(name)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InstanceError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj), tuple(labels) if labels is not None else None)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.open_masks))

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adj[v])

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = [self.label(v) for v in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), edges, labels)

    def without_edge(self, u: int, v: int) -> Graph:
        if v not in self.adj[u]:
            raise InstanceError(f"no edge ({u}, {v})")
        edges = [e for e in self.edges if e != (min(u, v), max(u, v))]
        return Graph.from_edges(self.n, edges, self.labels)


@dataclass(frozen=True)
class Hypergraph:
    universe: tuple[str, ...]
    sets: tuple[frozenset[str], ...]
    set_names: tuple[str, ...] | None = None

    def __post_init__(self):
        for name in self.universe:
            _check_name(name)
        if len(set(self.universe)) != len(self.universe):
            raise InstanceError("element names must be unique")
        members = set(self.universe)
        for j, s in enumerate(self.sets):
            if not s:
                raise InstanceError(f"set {j} is empty; an empty set admits no hitting set")
            stray = s - members
            if stray:
                raise InstanceError(f"set {j} has elements outside the universe: {sorted(stray)}")
        if self.set_names is not None:
            if len(self.set_names) != len(self.sets):
                raise InstanceError("set_names must have one entry per set")
            for name in self.set_names:
                _check_name(name)
        if len(set(self.sets)) != len(self.sets):
            warnings.warn("hypergraph contains duplicate sets", stacklevel=3)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable], universe: Iterable | None = None,
                  set_names: Sequence[str] | None = None) -> Hypergraph:
        """Build a hypergraph; without an explicit universe, elements appear in first-seen order."""
        family = [[str(x) for x in s] for s in sets]
        if universe is None:
            seen: dict[str, None] = {}
            for s in family:
                for x in s:
                    seen.setdefault(x)
            elements = tuple(seen)
        else:
            elements = tuple(str(x) for x in universe)
        names = tuple(set_names) if set_names is not None else None
        return cls(elements, tuple(frozenset(s) for s in family), names)

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.universe)}

    @cached_property
    def set_masks(self) -> tuple[int, ...]:
        idx = self.index
        return tuple(sum(1 << idx[x] for x in s) for s in self.sets)

    def set_name(self, j: int) -> str:
        return self.set_names[j] if self.set_names is not None else f"S{j}"

    def ordered(self, elements: Iterable[str]) -> tuple[str, ...]:
        """Return ``elements`` in universe order."""
        idx = self.index
        return tuple(sorted(set(elements), key=idx.__getitem__))

    def members(self, j: int) -> tuple[str, ...]:
        return self.ordered(self.sets[j])

    def uncoverable_elements(self) -> tuple[str, ...]:
        covered = set().union(*self.sets) if self.sets else set()
        return tuple(x for x in self.universe if x not in covered)

    def dual(self) -> Hypergraph:
        """Swap the roles of elements and sets: element ``x`` becomes the set of indices of sets containing it."""
        bad = self.uncoverable_elements()
        if bad:
            raise InstanceError(f"elements {list(bad)} lie in no set; the dual would contain empty sets")
        names = tuple(str(j) for j in range(len(self.sets)))
        dual_sets = tuple(frozenset(str(j) for j, s in enumerate(self.sets) if x in s) for x in self.universe)
        return Hypergraph(names, dual_sets, self.universe)


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not name or any(c.isspace() or c in ",{}" for c in name):
        raise InstanceError(f"invalid name {name!r}: names must be nonempty and free of whitespace, commas and braces")


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise InstanceError(f"invalid vertex id {v!r} for a graph on {G.n} vertices")


def open_neighborhood(G: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(G, v)
    return G.neighbors(v)


def closed_neighborhood(G: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(G, v)
    return tuple(sorted(G.adj[v] | {v}))


def is_bipartite(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-color every component (lowest id of a component gets side 0); None on an odd cycle."""
    color = [-1] * G.n
    for root in range(G.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return (tuple(v for v in range(G.n) if color[v] == 0),
            tuple(v for v in range(G.n) if color[v] == 1))


def is_split(G: Graph) -> bool:
    # Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i - 1},
    # G is split iff sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
    degrees = sorted((G.degree(v) for v in range(G.n)), reverse=True)
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    return sum(degrees[:m]) == m * (m - 1) + sum(degrees[m:])


def degeneracy(G: Graph) -> int:
    remaining = set(range(G.n))
    deg = {v: G.degree(v) for v in remaining}
    best = 0
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        remaining.remove(v)
        for u in G.adj[v]:
            if u in remaining:
                deg[u] -= 1
    return best


def is_connected(G: Graph) -> bool:
    if G.n < 1:
        raise InstanceError("connectivity is undefined for the empty graph")
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in G.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


def incidence_bipartite_graph(H: Hypergraph) -> tuple[Graph, tuple[str, ...]]:
    """Element vertices first (universe order), then one vertex per set; returns the graph and each vertex's side."""
    k = len(H.universe)
    edges = [(H.index[x], k + j) for j, s in enumerate(H.sets) for x in s]
    labels = list(H.universe) + [H.set_name(j) for j in range(len(H.sets))]
    sides = ("element",) * k + ("set",) * len(H.sets)
    return Graph.from_edges(k + len(H.sets), edges, labels), sides


# Small named graphs used by fixtures, the CLI and the corona round-trip.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InstanceError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])
