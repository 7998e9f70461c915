"""Wellness deciders: do all minimal solutions of a kind share one size?

A negative answer always comes with a certificate, namely two minimal
solutions of different sizes, which :func:`verify_witness` re-checks through
the definitional predicates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Graph, Hypergraph
from .enumeration import (
    DEFAULT_CAP,
    SolutionKind,
    is_solution,
    iter_solutions,
    solution_sort_key,
)


class WellProperty(str, enum.Enum):
    WELL_COVERED = "well-covered"
    WELL_DOMINATED = "well-dominated"
    WELL_TOTAL_DOMINATED = "well-total-dominated"
    WELL_HITTING_SET = "well-hitting-set"
    WELL_SET_COVER = "well-set-cover"
    WELL_HITTING_SET_COVER = "well-hitting-set-cover"


# Well-coveredness is decided on maximal independent sets, the complements of minimal vertex covers.
KINDS = {
    WellProperty.WELL_COVERED: (SolutionKind.MAXIMAL_INDEPENDENT_SET,),
    WellProperty.WELL_DOMINATED: (SolutionKind.MINIMAL_DOMINATING_SET,),
    WellProperty.WELL_TOTAL_DOMINATED: (SolutionKind.MINIMAL_TOTAL_DOMINATING_SET,),
    WellProperty.WELL_HITTING_SET: (SolutionKind.MINIMAL_HITTING_SET,),
    WellProperty.WELL_SET_COVER: (SolutionKind.MINIMAL_SET_COVER,),
    WellProperty.WELL_HITTING_SET_COVER: (SolutionKind.MINIMAL_HITTING_SET, SolutionKind.MINIMAL_SET_COVER),
}


@dataclass(frozen=True)
class Witness:
    kind: SolutionKind
    members: tuple

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.members) + "}"


@dataclass(frozen=True)
class WellnessReport:
    property: WellProperty
    well: bool
    common_size: int | None
    witness: tuple[Witness, Witness] | None
    solution_count: int

    @property
    def verdict(self) -> str:
        return "well" if self.well else "not-well"

    def record(self) -> str:
        """``property verdict size|size1,size2 witness1 witness2``; absent witnesses print as ``-``."""
        if self.well:
            return f"{self.property.value} well {self.common_size} - -"
        a, b = self.witness
        return f"{self.property.value} not-well {len(a)},{len(b)} {a} {b}"

    def describe(self) -> str:
        name = self.property.value
        if self.well:
            return (f"{name}: yes. All {self.solution_count} solutions examined have size {self.common_size}.")
        a, b = self.witness
        return (f"{name}: no. {a.kind.value} {a} has size {len(a)} but "
                f"{b.kind.value} {b} has size {len(b)} ({self.solution_count} solutions examined).")


def verify_witness(instance: Graph | Hypergraph, report: WellnessReport) -> bool:
    """Re-check a not-well certificate independently of the engine that produced it."""
    if report.well:
        return report.witness is None
    a, b = report.witness
    return len(a) != len(b) and all(is_solution(instance, w.kind, w.members) for w in (a, b))


def check(instance: Graph | Hypergraph, prop: WellProperty | str, *, full: bool = False,
          engine: str = "branch", cap: int = DEFAULT_CAP) -> WellnessReport:
    """Decide ``prop`` on ``instance``.

    By default enumeration stops at the first pair of distinct sizes, and the
    witness is that pair (smaller first). With ``full=True`` the whole family is
    enumerated and the witness is the first minimum-size and first maximum-size
    solution in (size, ids) order.
    """
    prop = WellProperty(prop)
    kinds = KINDS[prop]
    # validate every family before enumerating, so errors do not depend on short-circuiting
    streams = [iter_solutions(instance, kind, engine=engine, cap=cap) for kind in kinds]

    if full:
        everything = []
        for kind, stream in zip(kinds, streams):
            key = solution_sort_key(instance, kind)
            everything += [Witness(kind, s) for s in sorted(stream, key=key)]
        sizes = {len(w) for w in everything}
        if len(sizes) <= 1:
            return WellnessReport(prop, True, sizes.pop() if sizes else None, None, len(everything))
        lo = next(w for w in everything if len(w) == min(sizes))
        hi = next(w for w in everything if len(w) == max(sizes))
        return WellnessReport(prop, False, None, (lo, hi), len(everything))

    first = None
    count = 0
    for kind, stream in zip(kinds, streams):
        for s in stream:
            count += 1
            w = Witness(kind, s)
            if first is None:
                first = w
            elif len(w) != len(first):
                pair = (first, w) if len(first) < len(w) else (w, first)
                return WellnessReport(prop, False, None, pair, count)
    return WellnessReport(prop, True, len(first) if first is not None else None, None, count)


def check_well_covered(G: Graph, **kw) -> WellnessReport:
    return check(G, WellProperty.WELL_COVERED, **kw)


def check_well_dominated(G: Graph, **kw) -> WellnessReport:
    return check(G, WellProperty.WELL_DOMINATED, **kw)


def check_well_totally_dominated(G: Graph, **kw) -> WellnessReport:
    return check(G, WellProperty.WELL_TOTAL_DOMINATED, **kw)


def check_well_hitting_set(H: Hypergraph, **kw) -> WellnessReport:
    return check(H, WellProperty.WELL_HITTING_SET, **kw)


def check_well_set_cover(H: Hypergraph, **kw) -> WellnessReport:
    return check(H, WellProperty.WELL_SET_COVER, **kw)


def check_well_hitting_set_cover(H: Hypergraph, **kw) -> WellnessReport:
    return check(H, WellProperty.WELL_HITTING_SET_COVER, **kw)
