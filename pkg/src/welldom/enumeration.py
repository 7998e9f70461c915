"""Exhaustive enumeration of minimal (or maximal) solutions.

Every solution kind is a minimal-transversal problem over bitmasks:

* minimal dominating sets hit every closed neighborhood,
* minimal total dominating sets hit every open neighborhood,
* minimal vertex covers hit every edge,
* maximal independent sets are complements of minimal vertex covers,
* minimal hitting sets hit every set of the family,
* minimal set covers hit, for every element, the sets containing it.

Two engines share one interface. ``"branch"`` is a branch-and-prune search
that branches on an unhit set and keeps every chosen element's private sets
nonempty. ``"scan"`` is the reference oracle: a cardinality-ascending scan of
all subsets filtered through the definitional predicates below, which never
touch the bitmask translation above.
"""
from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .core import Graph, Hypergraph, InstanceError
from .formats import write_instance

DEFAULT_CAP = 24
SCAN_LIMIT = 16


class SolutionKind(str, enum.Enum):
    MAXIMAL_INDEPENDENT_SET = "maximal-independent-set"
    MINIMAL_VERTEX_COVER = "minimal-vertex-cover"
    MINIMAL_DOMINATING_SET = "minimal-dominating-set"
    MINIMAL_TOTAL_DOMINATING_SET = "minimal-total-dominating-set"
    MINIMAL_HITTING_SET = "minimal-hitting-set"
    MINIMAL_SET_COVER = "minimal-set-cover"

    @property
    def on_graph(self) -> bool:
        return self not in (SolutionKind.MINIMAL_HITTING_SET, SolutionKind.MINIMAL_SET_COVER)


class EnumerationCapError(InstanceError):
    """The instance has more ground elements than the enumeration cap allows."""


class NoTotalDominatingSetError(InstanceError):
    """A graph with an isolated vertex has no total dominating set at all."""


class UncoverableElementError(InstanceError):
    """Some universe element lies in no set, so no set cover exists."""


@dataclass(frozen=True)
class SolutionFamily:
    kind: SolutionKind
    fingerprint: str
    solutions: tuple[tuple, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.solutions))

    @property
    def size_values(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.sizes)))

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def fingerprint(instance: Graph | Hypergraph) -> str:
    return hashlib.sha256(write_instance(instance).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# definitional predicates (used by the scan oracle and to re-check certificates)

def is_independent_set(G: Graph, S) -> bool:
    S = set(S)
    return all(not (G.adj[v] & S) for v in S)


def is_maximal_independent_set(G: Graph, S) -> bool:
    S = set(S)
    return is_independent_set(G, S) and all(G.adj[v] & S for v in range(G.n) if v not in S)


def is_vertex_cover(G: Graph, S) -> bool:
    S = set(S)
    return all(u in S or v in S for u, v in G.edges)


def is_dominating_set(G: Graph, S) -> bool:
    S = set(S)
    return all(v in S or G.adj[v] & S for v in range(G.n))


def is_total_dominating_set(G: Graph, S) -> bool:
    S = set(S)
    return all(G.adj[v] & S for v in range(G.n))


def is_hitting_set(H: Hypergraph, S) -> bool:
    S = set(S)
    return all(s & S for s in H.sets)


def is_set_cover(H: Hypergraph, indices) -> bool:
    covered = set()
    for j in indices:
        covered |= H.sets[j]
    return covered >= set(H.universe)


def is_minimal(feasible: Callable[[set], bool], S) -> bool:
    S = set(S)
    return feasible(S) and all(not feasible(S - {x}) for x in S)


def feasibility_predicate(instance: Graph | Hypergraph, kind: SolutionKind) -> Callable[[set], bool]:
    table = {
        SolutionKind.MAXIMAL_INDEPENDENT_SET: is_independent_set,
        SolutionKind.MINIMAL_VERTEX_COVER: is_vertex_cover,
        SolutionKind.MINIMAL_DOMINATING_SET: is_dominating_set,
        SolutionKind.MINIMAL_TOTAL_DOMINATING_SET: is_total_dominating_set,
        SolutionKind.MINIMAL_HITTING_SET: is_hitting_set,
        SolutionKind.MINIMAL_SET_COVER: is_set_cover,
    }
    pred = table[kind]
    return lambda S: pred(instance, S)


def is_solution(instance: Graph | Hypergraph, kind: SolutionKind, S) -> bool:
    """True iff ``S`` is feasible and minimal (maximal, for independent sets) for ``kind``."""
    if kind is SolutionKind.MAXIMAL_INDEPENDENT_SET:
        return is_maximal_independent_set(instance, S)
    return is_minimal(feasibility_predicate(instance, kind), S)


# ---------------------------------------------------------------------------
# engines

def minimal_transversal_masks(n: int, hyperedges: list[int]) -> Iterator[int]:
    """Yield every minimal transversal (as a bitmask over ``range(n)``) of the given hyperedges.

    Each transversal is produced exactly once. Hyperedges must be nonzero.
    """
    m = len(hyperedges)
    elem_edges = [0] * n
    for j, e in enumerate(hyperedges):
        x = e
        while x:
            low = x & -x
            elem_edges[low.bit_length() - 1] |= 1 << j
            x ^= low
    edge_masks = list(hyperedges)

    def search(chosen: int, crit: dict[int, int], uncov: int, cand: int) -> Iterator[int]:
        if not uncov:
            yield chosen
            return
        # branch on the uncovered hyperedge with the fewest candidates
        best, best_count = -1, n + 1
        u = uncov
        while u:
            low = u & -u
            j = low.bit_length() - 1
            c = bin(edge_masks[j] & cand).count("1")
            if c < best_count:
                best, best_count = j, c
                if c == 0:
                    return
            u ^= low
        branch = edge_masks[best] & cand
        cand &= ~branch
        x = branch
        while x:
            low = x & -x
            e = low.bit_length() - 1
            hit = elem_edges[e]
            new_crit = {}
            ok = True
            for f, c in crit.items():
                c &= ~hit
                if not c:
                    ok = False
                    break
                new_crit[f] = c
            if ok:
                new_crit[e] = hit & uncov
                yield from search(chosen | low, new_crit, uncov & ~hit, cand)
            cand |= low
            x ^= low

    yield from search(0, {}, (1 << m) - 1, (1 << n) - 1)


def _mask_to_ids(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def ground_size(instance: Graph | Hypergraph, kind: SolutionKind) -> int:
    if kind is SolutionKind.MINIMAL_SET_COVER:
        return len(instance.sets)
    if kind is SolutionKind.MINIMAL_HITTING_SET:
        return len(instance.universe)
    return instance.n


def _validate(instance: Graph | Hypergraph, kind: SolutionKind, cap: int, limit: int | None = None) -> None:
    if kind.on_graph != isinstance(instance, Graph):
        want = "graph" if kind.on_graph else "hypergraph"
        raise InstanceError(f"{kind.value} enumeration needs a {want}")
    if kind.on_graph and instance.n < 1:
        raise InstanceError("the graph has no vertices")
    size = ground_size(instance, kind)
    if size > cap:
        raise EnumerationCapError(f"{size} ground elements exceed the enumeration cap of {cap}")
    if limit is not None and size > limit:
        raise EnumerationCapError(f"the subset-scan oracle is limited to {limit} ground elements, got {size}")
    if kind is SolutionKind.MINIMAL_TOTAL_DOMINATING_SET and instance.isolated_vertices():
        raise NoTotalDominatingSetError(
            f"isolated vertices {list(instance.isolated_vertices())} admit no total dominating set")
    if kind is SolutionKind.MINIMAL_SET_COVER and instance.uncoverable_elements():
        raise UncoverableElementError(
            f"elements {list(instance.uncoverable_elements())} lie in no set")


def _branch(instance, kind: SolutionKind) -> Iterator[int]:
    if kind is SolutionKind.MINIMAL_DOMINATING_SET:
        yield from minimal_transversal_masks(instance.n, list(instance.closed_masks))
    elif kind is SolutionKind.MINIMAL_TOTAL_DOMINATING_SET:
        yield from minimal_transversal_masks(instance.n, list(instance.open_masks))
    elif kind is SolutionKind.MINIMAL_VERTEX_COVER:
        yield from minimal_transversal_masks(instance.n, [(1 << u) | (1 << v) for u, v in instance.edges])
    elif kind is SolutionKind.MAXIMAL_INDEPENDENT_SET:
        full = (1 << instance.n) - 1
        for cover in minimal_transversal_masks(instance.n, [(1 << u) | (1 << v) for u, v in instance.edges]):
            yield full & ~cover
    elif kind is SolutionKind.MINIMAL_HITTING_SET:
        yield from minimal_transversal_masks(len(instance.universe), list(instance.set_masks))
    else:
        containing = [0] * len(instance.universe)
        for j, mask in enumerate(instance.set_masks):
            for i in _mask_to_ids(mask):
                containing[i] |= 1 << j
        yield from minimal_transversal_masks(len(instance.sets), containing)


def _scan(instance, kind: SolutionKind) -> Iterator[int]:
    n = ground_size(instance, kind)
    if kind is SolutionKind.MAXIMAL_INDEPENDENT_SET:
        keep = lambda S: is_maximal_independent_set(instance, S)
    else:
        keep = lambda S: is_minimal(feasibility_predicate(instance, kind), S)
    if kind is SolutionKind.MINIMAL_HITTING_SET:
        names = instance.universe
        as_members = lambda combo: {names[i] for i in combo}
    else:
        as_members = set
    for r in range(n + 1):
        for combo in combinations(range(n), r):
            if keep(as_members(combo)):
                yield sum(1 << i for i in combo)


def _decode(instance, kind: SolutionKind, mask: int) -> tuple:
    ids = _mask_to_ids(mask)
    if kind is SolutionKind.MINIMAL_HITTING_SET:
        return tuple(instance.universe[i] for i in ids)
    return ids


def iter_solutions(instance: Graph | Hypergraph, kind: SolutionKind | str, *,
                   engine: str = "branch", cap: int = DEFAULT_CAP) -> Iterator[tuple]:
    """Lazily yield solutions in engine order. Validation happens before the first item."""
    kind = SolutionKind(kind)
    if engine == "branch":
        _validate(instance, kind, cap)
        masks = _branch(instance, kind)
    elif engine == "scan":
        _validate(instance, kind, cap, SCAN_LIMIT)
        masks = _scan(instance, kind)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return (_decode(instance, kind, m) for m in masks)


def solution_sort_key(instance, kind: SolutionKind):
    if kind is SolutionKind.MINIMAL_HITTING_SET:
        idx = instance.index
        return lambda s: (len(s), tuple(idx[x] for x in s))
    return lambda s: (len(s), s)


def enumerate_solutions(instance: Graph | Hypergraph, kind: SolutionKind | str, *,
                        engine: str = "branch", cap: int = DEFAULT_CAP) -> SolutionFamily:
    """Complete family sorted by (cardinality, ids); hitting sets compare by universe position."""
    kind = SolutionKind(kind)
    solutions = sorted(iter_solutions(instance, kind, engine=engine, cap=cap), key=solution_sort_key(instance, kind))
    return SolutionFamily(kind, fingerprint(instance), tuple(solutions))


def enumerate_maximal_independent_sets(G: Graph, **kw) -> SolutionFamily:
    return enumerate_solutions(G, SolutionKind.MAXIMAL_INDEPENDENT_SET, **kw)


def enumerate_minimal_vertex_covers(G: Graph, **kw) -> SolutionFamily:
    return enumerate_solutions(G, SolutionKind.MINIMAL_VERTEX_COVER, **kw)


def enumerate_minimal_dominating_sets(G: Graph, **kw) -> SolutionFamily:
    return enumerate_solutions(G, SolutionKind.MINIMAL_DOMINATING_SET, **kw)


def enumerate_minimal_total_dominating_sets(G: Graph, **kw) -> SolutionFamily:
    return enumerate_solutions(G, SolutionKind.MINIMAL_TOTAL_DOMINATING_SET, **kw)


def enumerate_minimal_hitting_sets(H: Hypergraph, **kw) -> SolutionFamily:
    return enumerate_solutions(H, SolutionKind.MINIMAL_HITTING_SET, **kw)


def enumerate_minimal_set_covers(H: Hypergraph, **kw) -> SolutionFamily:
    """Minimal set covers as sorted tuples of set indices."""
    return enumerate_solutions(H, SolutionKind.MINIMAL_SET_COVER, **kw)
