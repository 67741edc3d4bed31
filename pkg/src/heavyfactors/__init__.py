"""Heavy clique factors in edge-weighted complete graphs.

Exact-rational graph core, extremal constructions, complete solvers with
certificates, constructive factor schemes, and a threshold experiment lab.
"""

from .constructions import (
    ConstructionDescriptor,
    WeightDistribution,
    build,
    counterexample_29_36,
    hs_sharpness_construction,
    hs_sharpness_parts,
    min_degree_conditioned,
    prop2_construction,
    prop2_min_degree,
    random_weighting,
    rebuild,
    uniform_grid,
)
from .core import (
    BudgetExceededError,
    CapExceededError,
    CliqueFactor,
    FactorParams,
    GraphFormatError,
    ThresholdGraph,
    WeightedCompleteGraph,
    dumps_canonical,
    format_rational,
    graph_from_json,
    graph_to_json,
    is_heavy,
    is_overweight_edge,
    is_strictly_heavy,
    load_graph,
    parse_rational,
    save_graph,
)
from .lab import (
    BoundRecord,
    ConjectureReport,
    ScanCell,
    TrialReport,
    adversarial_search,
    conjecture_report_csv,
    evaluate_lower_bounds,
    scan_report,
    verify_theorem3_empirically,
)
from .matching import bipartite_maximum_matching, maximum_matching, perfect_matching
from .schemes import (
    BipartiteAverageGraph,
    QuotientGraph,
    bipartite_threshold_matching,
    build_bipartite_average,
    local_search_heavy_collection,
    matching_base_case,
    scheme1_lift,
    scheme1_quotient,
    scheme2_factor,
    scheme2_partition,
)
from .solver import (
    HeavyCollection,
    HeavyHypergraph,
    SolveCertificate,
    StructureReport,
    StructureViolation,
    build_heavy_hypergraph,
    check_facts_at_maximum,
    daykin_haggkvist_check,
    enumerate_all_factors,
    enumerate_maximum_heavy_collections,
    find_heavy_factor,
    heavy_cliques_containing,
    hypergraph_perfect_matching,
    lemma1_bound,
    t_r_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteAverageGraph",
    "BoundRecord",
    "BudgetExceededError",
    "CapExceededError",
    "CliqueFactor",
    "ConjectureReport",
    "ConstructionDescriptor",
    "FactorParams",
    "GraphFormatError",
    "HeavyCollection",
    "HeavyHypergraph",
    "QuotientGraph",
    "ScanCell",
    "SolveCertificate",
    "StructureReport",
    "StructureViolation",
    "ThresholdGraph",
    "TrialReport",
    "WeightDistribution",
    "WeightedCompleteGraph",
    "adversarial_search",
    "bipartite_maximum_matching",
    "bipartite_threshold_matching",
    "build",
    "build_bipartite_average",
    "build_heavy_hypergraph",
    "check_facts_at_maximum",
    "conjecture_report_csv",
    "counterexample_29_36",
    "daykin_haggkvist_check",
    "dumps_canonical",
    "enumerate_all_factors",
    "enumerate_maximum_heavy_collections",
    "evaluate_lower_bounds",
    "find_heavy_factor",
    "format_rational",
    "graph_from_json",
    "graph_to_json",
    "heavy_cliques_containing",
    "hs_sharpness_construction",
    "hs_sharpness_parts",
    "hypergraph_perfect_matching",
    "is_heavy",
    "is_overweight_edge",
    "is_strictly_heavy",
    "lemma1_bound",
    "load_graph",
    "local_search_heavy_collection",
    "matching_base_case",
    "maximum_matching",
    "min_degree_conditioned",
    "parse_rational",
    "perfect_matching",
    "prop2_construction",
    "prop2_min_degree",
    "random_weighting",
    "rebuild",
    "save_graph",
    "scan_report",
    "scheme1_lift",
    "scheme1_quotient",
    "scheme2_factor",
    "scheme2_partition",
    "t_r_threshold",
    "uniform_grid",
    "verify_theorem3_empirically",
]
