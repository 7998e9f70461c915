"""Gadget constructions from hitting-set instances, plus opt-in exponential verifiers.

Constructors run in polynomial time and only build the instance. The
``verify_*`` functions enumerate both sides and compare minimal-solution sizes.

Vertex numbering of the total-domination gadget: ``s=0``, ``t=1``, then one
``v_<u>`` per element in universe order, then one ``w_<F>`` per set in family
order. Domination gadget: ``r=0``, then the element clique, then the copies
``F_1 .. F_{k-1}`` each in family order.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable

from .core import Graph, Hypergraph, InstanceError, degeneracy, is_bipartite, is_split
from .enumeration import (
    DEFAULT_CAP,
    SolutionFamily,
    enumerate_minimal_dominating_sets,
    enumerate_minimal_hitting_sets,
    enumerate_minimal_total_dominating_sets,
    is_hitting_set,
)


class PreconditionError(InstanceError):
    """The source instance does not satisfy a construction's precondition."""


@dataclass(frozen=True)
class Role:
    tag: str            # s, t, r, element, set, or set@i for the i-th copy
    source: str = "-"   # element or set name the vertex stands for


@dataclass(frozen=True)
class ReductionOutput:
    instance: Graph
    roles: tuple[Role, ...]
    guarantees: frozenset[str]
    parameters: dict = field(default_factory=dict)

    def vertices_with(self, tag: str) -> tuple[int, ...]:
        return tuple(v for v, r in enumerate(self.roles) if r.tag == tag)

    def role_table(self) -> str:
        return "".join(f"r {v} {r.tag} {r.source}\n" for v, r in enumerate(self.roles))


@dataclass(frozen=True)
class CorrespondenceReport:
    """Compares value-sets of minimal-solution sizes on the source and the gadget.

    ``expected_sizes`` is what the construction predicts for the gadget;
    ``counterexample`` is the smallest size (gadget scale) present on exactly one
    side, and ``witness`` a gadget solution of that size when one exists.
    """
    source_sizes: tuple[int, ...]
    target_sizes: tuple[int, ...]
    shift: int
    expected_sizes: tuple[int, ...]
    match: bool
    counterexample: int | None = None
    witness: tuple | None = None
    source_well: bool | None = None
    target_well: bool | None = None

    def record(self) -> str:
        def fmt(values):
            return "{" + ",".join(map(str, values)) + "}"
        cex = "-" if self.counterexample is None else str(self.counterexample)
        return (f"{'match' if self.match else 'mismatch'} {fmt(self.source_sizes)} "
                f"{fmt(self.target_sizes)} {self.shift} {cex}")


def _sizes(family) -> tuple[int, ...]:
    if hasattr(family, "sizes"):
        return tuple(family.size_values)
    return tuple(sorted(set(family)))


def _compare(source: tuple[int, ...], target: tuple[int, ...], expected: set[int], shift: int,
             target_family=None, **extra) -> CorrespondenceReport:
    diff = sorted(expected.symmetric_difference(target))
    cex = diff[0] if diff else None
    witness = None
    if cex is not None and target_family is not None and hasattr(target_family, "solutions"):
        witness = next((s for s in target_family.solutions if len(s) == cex), None)
    return CorrespondenceReport(source, target, shift, tuple(sorted(expected)), not diff, cex, witness, **extra)


def verify_size_correspondence(source: SolutionFamily | Iterable[int], target: SolutionFamily | Iterable[int],
                               shift: int) -> CorrespondenceReport:
    """Check that the gadget's size values are exactly the source's size values moved by ``shift``.

    Either argument may be a complete family or a plain collection of sizes.
    """
    src, tgt = _sizes(source), _sizes(target)
    return _compare(src, tgt, {s + shift for s in src}, shift, target)


# ---------------------------------------------------------------------------
# constructions

def single_element_hitters(H: Hypergraph) -> tuple[str, ...]:
    """Elements lying in every set, i.e. the singleton hitting sets."""
    return tuple(x for x in H.universe if all(x in s for s in H.sets))


def hitting_set_to_total_domination(H: Hypergraph, variant: str = "plain") -> ReductionOutput:
    """Bipartite gadget whose minimal total dominating sets are ``{s}`` plus a minimal hitting set.

    ``variant="split"`` also joins ``s`` and all element vertices into a clique.
    """
    if variant not in ("plain", "split"):
        raise ValueError(f"unknown variant {variant!r}")
    if not H.sets:
        raise PreconditionError("the family is empty")
    hitters = single_element_hitters(H)
    if hitters:
        raise PreconditionError(f"element {hitters[0]} hits every set, so some hitting set has size one")

    k = len(H.universe)
    s, t = 0, 1
    v = {x: 2 + i for i, x in enumerate(H.universe)}
    w = [2 + k + j for j in range(len(H.sets))]
    edges = [(s, t)] + [(s, v[x]) for x in H.universe]
    edges += [(v[x], w[j]) for j in range(len(H.sets)) for x in H.members(j)]
    if variant == "split":
        edges += [(v[a], v[b]) for i, a in enumerate(H.universe) for b in H.universe[i + 1:]]
    labels = ["s", "t"] + [f"v_{x}" for x in H.universe] + [f"w_{H.set_name(j)}" for j in range(len(H.sets))]
    roles = ([Role("s"), Role("t")] + [Role("element", x) for x in H.universe]
             + [Role("set", H.set_name(j)) for j in range(len(H.sets))])

    if variant == "plain":
        guarantees = {"bipartite"}
        if all(len(S) == 2 for S in H.sets):
            guarantees.add("2-degenerate")
    else:
        guarantees = {"split"}
    G = Graph.from_edges(2 + k + len(H.sets), edges, labels)
    return ReductionOutput(G, tuple(roles), frozenset(guarantees), {"variant": variant, "shift": 1})


def greedy_minimal_hitting_set(H: Hypergraph) -> tuple[str, ...]:
    """Start from the whole universe and drop, in universe order, every element that is not needed."""
    current = set(H.universe)
    for x in H.universe:
        if is_hitting_set(H, current - {x}):
            current.discard(x)
    return H.ordered(current)


def hitting_set_to_domination(H: Hypergraph, k: int, *, verify: bool = False,
                              cap: int = DEFAULT_CAP) -> ReductionOutput:
    """Clique-cover gadget: well-dominated iff every minimal hitting set of ``H`` has size ``k``.

    The graph has a vertex ``r``, a clique on the elements joined to ``r``, and
    ``k - 1`` cliques each holding one vertex per set, adjacent to that set's
    elements. With ``verify=True`` the function also checks by enumeration that
    ``k`` is the size of some minimal hitting set.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    if not H.sets:
        raise PreconditionError("the family is empty")
    if verify and k not in enumerate_minimal_hitting_sets(H, cap=cap).size_values:
        raise PreconditionError(f"no minimal hitting set has size {k}")

    nu, nf = len(H.universe), len(H.sets)
    r = 0
    u = {x: 1 + i for i, x in enumerate(H.universe)}

    def copy_vertex(i: int, j: int) -> int:
        return 1 + nu + (i - 1) * nf + j

    edges = [(r, u[x]) for x in H.universe]
    edges += [(u[a], u[b]) for i, a in enumerate(H.universe) for b in H.universe[i + 1:]]
    labels = ["r"] + [f"v_{x}" for x in H.universe]
    roles = [Role("r")] + [Role("element", x) for x in H.universe]
    cover = [(r,) + tuple(u.values())]
    for i in range(1, k):
        clique = tuple(copy_vertex(i, j) for j in range(nf))
        cover.append(clique)
        edges += [(clique[a], clique[b]) for a in range(nf) for b in range(a + 1, nf)]
        for j in range(nf):
            edges += [(u[x], copy_vertex(i, j)) for x in H.members(j)]
            labels.append(f"f{i}_{H.set_name(j)}")
            roles.append(Role(f"set@{i}", H.set_name(j)))
    G = Graph.from_edges(1 + nu + (k - 1) * nf, edges, labels)
    return ReductionOutput(G, tuple(roles), frozenset({"clique-cover"}), {"k": k, "clique_cover": tuple(cover)})


def vertex_cover_to_hitting_set(G: Graph) -> Hypergraph:
    """One two-element set per edge over the vertex universe."""
    if not G.edges:
        raise PreconditionError("the graph has no edges")
    return Hypergraph(tuple(str(v) for v in range(G.n)),
                      tuple(frozenset({str(a), str(b)}) for a, b in G.edges),
                      tuple(f"e{a}-{b}" for a, b in G.edges))


def vertex_cover_to_set_cover(G: Graph) -> Hypergraph:
    """Universe = edges, one set per non-isolated vertex (named by the vertex id) holding its incident edges."""
    if not G.edges:
        raise PreconditionError("the graph has no edges")
    names = [f"e{a}-{b}" for a, b in G.edges]
    keep = [v for v in range(G.n) if G.adj[v]]
    sets = [frozenset(names[i] for i, e in enumerate(G.edges) if v in e) for v in keep]
    return Hypergraph(tuple(names), tuple(sets), tuple(str(v) for v in keep))


def domination_to_hitting_set(G: Graph, mode: str = "closed") -> Hypergraph:
    """Vertex universe with one set per vertex: ``N[v]`` for ``closed``, ``N(v)`` for ``open``."""
    if mode == "closed":
        sets = [G.adj[v] | {v} for v in range(G.n)]
    elif mode == "open":
        if G.isolated_vertices():
            raise PreconditionError(f"isolated vertices {list(G.isolated_vertices())} have empty open neighborhoods")
        sets = [G.adj[v] for v in range(G.n)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Hypergraph(tuple(str(v) for v in range(G.n)),
                      tuple(frozenset(str(u) for u in s) for s in sets),
                      tuple(f"N{v}" for v in range(G.n)))


# ---------------------------------------------------------------------------
# verifiers

def check_guarantees(out: ReductionOutput) -> dict[str, bool]:
    """Evaluate each declared structural guarantee with the predicates from ``core``."""
    G = out.instance
    results = {}
    for g in sorted(out.guarantees):
        if g == "bipartite":
            results[g] = is_bipartite(G) is not None
        elif g == "split":
            results[g] = is_split(G)
        elif g == "2-degenerate":
            results[g] = degeneracy(G) <= 2
        elif g == "clique-cover":
            cover = out.parameters["clique_cover"]
            flat = sorted(v for c in cover for v in c)
            cliques = all(b in G.adj[a] for c in cover for i, a in enumerate(c) for b in c[i + 1:])
            results[g] = cliques and flat == list(range(G.n)) and len(cover) == out.parameters["k"]
    return results


def forced_vertex_counts(out: ReductionOutput, family: SolutionFamily) -> dict[str, int]:
    """How many solutions contain ``s``, ``t``, and any set vertex, next to the family size."""
    s, = out.vertices_with("s")
    t, = out.vertices_with("t")
    sets = set(out.vertices_with("set"))
    return {
        "solutions": len(family),
        "s": sum(s in D for D in family),
        "t": sum(t in D for D in family),
        "set": sum(bool(sets.intersection(D)) for D in family),
    }


def verify_total_domination_reduction(H: Hypergraph, variant: str = "plain", *, cap: int = DEFAULT_CAP,
                                      mutate: Callable[[Graph], Graph] | None = None) -> CorrespondenceReport:
    """Enumerate both sides and compare sizes under the shift of one (the vertex ``s``).

    ``mutate`` edits the gadget before enumeration; it exists for negative
    controls. If the edited gadget has no total dominating set at all, the
    report is a mismatch with empty target sizes.
    """
    out = hitting_set_to_total_domination(H, variant)
    G = mutate(out.instance) if mutate is not None else out.instance
    source = enumerate_minimal_hitting_sets(H, cap=cap)
    if G.isolated_vertices():
        return _compare(source.size_values, (), {z + 1 for z in source.size_values}, 1)
    target = enumerate_minimal_total_dominating_sets(G, cap=cap)
    return verify_size_correspondence(source, target, 1)


def verify_well_domination_reduction(H: Hypergraph, k: int, *, cap: int = DEFAULT_CAP) -> CorrespondenceReport:
    """Check both sides of the biconditional and the exact size values of the gadget.

    Minimal dominating sets of the gadget are the minimal hitting sets (as
    element vertices) plus sets of size exactly ``k``, so the expected size
    values are the source's values together with ``k``.
    """
    out = hitting_set_to_domination(H, k)
    source = enumerate_minimal_hitting_sets(H, cap=cap)
    target = enumerate_minimal_dominating_sets(out.instance, cap=cap)
    source_well = source.size_values == (k,)
    target_well = len(target.size_values) == 1
    report = _compare(source.size_values, target.size_values, set(source.size_values) | {k}, 0,
                      source_well=source_well, target_well=target_well)
    off_size = next((s for s in target.solutions if len(s) != k), None)
    return replace(report, witness=off_size, match=report.match and source_well == target_well)
