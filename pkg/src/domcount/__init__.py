"""Exact domination-set counting, extremal constructions, and small-order
exhaustive verification for simple undirected graphs."""

from .constructions import (
    Component,
    PartitionPlan,
    build_component_graph,
    cocktail_party,
    complete_multipartite,
    component_plan,
    graph_from_plan,
    max_dominating_pairs,
    max_edges_gamma2,
    max_total_dominating_pairs,
    pair_extremal_graph,
    predicted_count,
)
from .domination import (
    DominationReport,
    count_minimum,
    count_sets,
    count_sets_naive,
    count_sets_with_witnesses,
    domination_number,
    is_dominating,
    is_total_dominating,
    total_domination_number,
)
from .errors import (
    GraphParseError,
    InfeasibleOrderError,
    InvalidEdgeError,
    MixedOrderError,
    SizeLimitError,
    UndefinedTotalDominationError,
)
from .graph6 import (
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    MAX_VERTICES,
    Graph,
    GraphBuilder,
    VertexSet,
    complete_graph,
    disjoint_union,
    from_edges,
    new_graph,
)
from .partitions import (
    AllocationComparison,
    check_balance_inequality,
    check_pairing_inequality,
    exhaustive_decomposition_oracle,
    optimize_allocation,
    quad_split_comparison,
)
from .scanning import (
    EfficiencyReport,
    ExtremalRecord,
    efficiency_ratio,
    enumerate_labeled_graphs,
    extremal_scan,
    graph_from_edge_mask,
    labeled_max_edges_gamma2,
    scan_labeled,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationComparison",
    "Component",
    "DominationReport",
    "EfficiencyReport",
    "ExtremalRecord",
    "Graph",
    "GraphBuilder",
    "GraphParseError",
    "InfeasibleOrderError",
    "InvalidEdgeError",
    "MAX_VERTICES",
    "MixedOrderError",
    "PartitionPlan",
    "SizeLimitError",
    "UndefinedTotalDominationError",
    "VertexSet",
    "build_component_graph",
    "check_balance_inequality",
    "check_pairing_inequality",
    "cocktail_party",
    "complete_graph",
    "complete_multipartite",
    "component_plan",
    "count_minimum",
    "count_sets",
    "count_sets_naive",
    "count_sets_with_witnesses",
    "disjoint_union",
    "domination_number",
    "efficiency_ratio",
    "enumerate_labeled_graphs",
    "exhaustive_decomposition_oracle",
    "extremal_scan",
    "from_edges",
    "graph_from_edge_mask",
    "graph_from_plan",
    "is_dominating",
    "is_total_dominating",
    "iter_graph6",
    "labeled_max_edges_gamma2",
    "max_dominating_pairs",
    "max_edges_gamma2",
    "max_total_dominating_pairs",
    "new_graph",
    "optimize_allocation",
    "pair_extremal_graph",
    "parse_edge_list",
    "parse_graph6",
    "predicted_count",
    "quad_split_comparison",
    "scan_labeled",
    "total_domination_number",
    "write_edge_list",
    "write_graph6",
]
