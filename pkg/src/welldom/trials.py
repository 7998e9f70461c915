"""Seeded randomized checks of the two gadget constructions.

Instances are drawn sequentially from one ``random.Random(seed)``; draws that
violate a construction's precondition are rejected and redrawn, so ``count``
always means that many valid trials.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .core import Graph, Hypergraph
from .enumeration import DEFAULT_CAP, enumerate_minimal_dominating_sets, enumerate_minimal_total_dominating_sets
from .generate import element_names, random_hypergraph
from .reductions import (
    CorrespondenceReport,
    check_guarantees,
    forced_vertex_counts,
    greedy_minimal_hitting_set,
    hitting_set_to_domination,
    hitting_set_to_total_domination,
    single_element_hitters,
    verify_total_domination_reduction,
    verify_well_domination_reduction,
)


@dataclass
class Trial:
    index: int
    source: Hypergraph
    passed: bool
    report: CorrespondenceReport | None
    failures: list[str] = field(default_factory=list)
    facts: dict = field(default_factory=dict)


@dataclass
class Summary:
    theorem: str
    trials: list[Trial]
    rejected: int

    @property
    def passed(self) -> int:
        return sum(t.passed for t in self.trials)

    @property
    def first_failure(self) -> Trial | None:
        return next((t for t in self.trials if not t.passed), None)

    def record(self) -> str:
        bad = self.first_failure
        cex = "-" if bad is None else f"{bad.index}:{';'.join(bad.failures)}"
        return f"{self.theorem} {self.passed} {len(self.trials)} {self.rejected} {cex}"

    def describe(self) -> str:
        lines = [f"{self.theorem}: {self.passed}/{len(self.trials)} trials passed "
                 f"({self.rejected} draws rejected by the precondition)"]
        bad = self.first_failure
        if bad is not None:
            lines.append(f"first failure at trial {bad.index}: {', '.join(bad.failures)}")
            if bad.report is not None:
                lines.append(f"  correspondence: {bad.report.record()}")
            lines.append("  source sets: " + " | ".join(" ".join(bad.source.members(j))
                                                      for j in range(len(bad.source.sets))))
        return "\n".join(lines)


def _random_pairs_hypergraph(rng: random.Random, n_elements: int, n_sets: int) -> Hypergraph:
    """Distinct two-element sets, i.e. the edge set of a random graph read as a hypergraph."""
    names = element_names(n_elements)
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    chosen = rng.sample(pairs, min(n_sets, len(pairs)))
    return Hypergraph.from_sets(chosen, universe=names)


def draw_total_domination_source(rng: random.Random, index: int, max_universe: int,
                                 max_sets: int) -> tuple[Hypergraph, int]:
    """Every fourth trial draws an all-pairs hypergraph so the 2-degenerate case is exercised."""
    rejected = 0
    while True:
        nu = rng.randint(2, max_universe)
        nf = rng.randint(1, max_sets)
        if index % 4 == 3:
            H = _random_pairs_hypergraph(rng, nu, nf)
        else:
            H = random_hypergraph(rng, nu, nf)
        if H.sets and not single_element_hitters(H):
            return H, rejected
        rejected += 1


def total_domination_trial(index: int, H: Hypergraph, cap: int = DEFAULT_CAP,
                           mutate: Callable[[Graph], Graph] | None = None) -> Trial:
    if mutate is not None:
        report = verify_total_domination_reduction(H, cap=cap, mutate=mutate)
        return Trial(index, H, report.match, report, [] if report.match else ["correspondence"])

    failures = []
    facts = {}
    report = None
    for variant in ("plain", "split"):
        out = hitting_set_to_total_domination(H, variant)
        for name, ok in check_guarantees(out).items():
            facts[f"{variant}:{name}"] = ok
            if not ok:
                failures.append(f"{variant}:{name}")
        rep = verify_total_domination_reduction(H, variant, cap=cap)
        if not rep.match:
            failures.append(f"{variant}:correspondence")
        if variant == "plain":
            report = rep
            family = enumerate_minimal_total_dominating_sets(out.instance, cap=cap)
            counts = forced_vertex_counts(out, family)
            facts["forced"] = counts
            if counts["s"] != counts["solutions"]:
                failures.append("s-not-forced")
            if counts["t"] or counts["set"]:
                failures.append("t-or-w-used")
    facts["pairs"] = all(len(S) == 2 for S in H.sets)
    return Trial(index, H, not failures, report, failures, facts)


def run_total_domination(count: int, seed: int, max_universe: int = 7, max_sets: int = 6,
                         cap: int = DEFAULT_CAP, mutate: Callable[[Graph], Graph] | None = None) -> Summary:
    rng = random.Random(seed)
    trials, rejected = [], 0
    for i in range(count):
        H, r = draw_total_domination_source(rng, i, max_universe, max_sets)
        rejected += r
        trials.append(total_domination_trial(i, H, cap, mutate))
    return Summary("total-domination", trials, rejected)


def draw_well_domination_source(rng: random.Random, max_universe: int, max_sets: int) -> tuple[Hypergraph, int, int]:
    """Random hypergraph with ``k`` the size of its greedy minimal hitting set, redrawn until ``k >= 2``."""
    rejected = 0
    while True:
        H = random_hypergraph(rng, rng.randint(2, max_universe), rng.randint(1, max_sets))
        k = len(greedy_minimal_hitting_set(H))
        if k >= 2:
            return H, k, rejected
        rejected += 1


def well_domination_trial(index: int, H: Hypergraph, k: int, cap: int = DEFAULT_CAP) -> Trial:
    failures = []
    out = hitting_set_to_domination(H, k)
    for name, ok in check_guarantees(out).items():
        if not ok:
            failures.append(name)
    report = verify_well_domination_reduction(H, k, cap=cap)
    if not report.match:
        failures.append("biconditional" if report.source_well != report.target_well else "sizes")
    # a minimal dominating set meeting every clique of the cover has exactly one vertex per clique
    cover = [set(c) for c in out.parameters["clique_cover"]]
    family = enumerate_minimal_dominating_sets(out.instance, cap=cap)
    if any(len(D) != k for D in family if all(c.intersection(D) for c in cover)):
        failures.append("clique-cover-size")
    facts = {"k": k, "source_well": report.source_well, "target_well": report.target_well}
    return Trial(index, H, not failures, report, failures, facts)


def run_well_domination(count: int, seed: int, max_universe: int = 6, max_sets: int = 4,
                        cap: int = DEFAULT_CAP) -> Summary:
    rng = random.Random(seed)
    trials, rejected = [], 0
    for i in range(count):
        H, k, r = draw_well_domination_source(rng, max_universe, max_sets)
        rejected += r
        trials.append(well_domination_trial(i, H, k, cap))
    return Summary("well-domination", trials, rejected)


def drop_first_element_edge(G: Graph) -> Graph:
    """Negative control for the total-domination gadget: remove the edge between ``s`` and the first element vertex."""
    return G.without_edge(0, 2)
