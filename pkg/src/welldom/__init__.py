"""Minimal-solution enumeration, wellness checks and hardness gadgets for domination and covering problems."""
from .chain import (
    ChainParameters,
    chain_parameters,
    corona_with_K1,
    is_corona_with_K1,
    is_very_well_covered,
    is_very_well_dominated,
    recognize_bipartite_well_dominated,
)
from .core import (
    Graph,
    Hypergraph,
    InstanceError,
    closed_neighborhood,
    degeneracy,
    incidence_bipartite_graph,
    is_bipartite,
    is_connected,
    is_split,
    open_neighborhood,
)
from .enumeration import (
    EnumerationCapError,
    NoTotalDominatingSetError,
    SolutionFamily,
    SolutionKind,
    UncoverableElementError,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    enumerate_minimal_hitting_sets,
    enumerate_minimal_set_covers,
    enumerate_minimal_total_dominating_sets,
    enumerate_minimal_vertex_covers,
)
from .reductions import (
    CorrespondenceReport,
    PreconditionError,
    ReductionOutput,
    domination_to_hitting_set,
    greedy_minimal_hitting_set,
    hitting_set_to_domination,
    hitting_set_to_total_domination,
    verify_size_correspondence,
    verify_total_domination_reduction,
    verify_well_domination_reduction,
    vertex_cover_to_hitting_set,
)
from .wellness import (
    WellnessReport,
    WellProperty,
    check_well_covered,
    check_well_dominated,
    check_well_hitting_set,
    check_well_hitting_set_cover,
    check_well_set_cover,
    check_well_totally_dominated,
)

__version__ = "0.1.0"
