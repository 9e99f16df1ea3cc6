"""Exact metric dimension toolkit for small graphs.

The package computes resolving sets and every attachment-aware variant of
the metric dimension by exact branch-and-bound search, builds graphs by
point-attaching (chains, block graphs, rooted and corona products), and
mechanically verifies the closed dimension formulas of those constructions
against brute force.
"""

from .errors import (
    DisconnectedGraphError,
    GraphError,
    GuardrailError,
    TruncationError,
)
from .graph import (
    UNREACHABLE,
    DistMatrix,
    DominationResult,
    Graph,
    MetricProfile,
    TreeProfile,
    all_pairs_distances,
    build_graph,
    complete_graph,
    cycle_graph,
    domination_number,
    induced_subgraph,
    is_complete,
    is_connected,
    is_path,
    is_tree,
    is_two_antipodal,
    isolated_after_removal,
    join_with_k1,
    make_standard,
    metric_profile,
    path_graph,
    star_graph,
    tree_profile,
)
from .resolve import (
    BASIS_CAP,
    DIM_GUARDRAIL,
    ENUM_GUARDRAIL,
    AttachingResult,
    DimResult,
    ResolveReport,
    attaching_dimension,
    basis_membership,
    enumerate_bases,
    is_resolving,
    isolation_index,
    max_basis_overlap,
    metric_dimension,
    upper_metric_dimension,
)
from .compose import (
    AttachProfile,
    AttachStep,
    Composition,
    CompositionBuilder,
    PathProductWitness,
    block_graph,
    build_isolation_family,
    build_realization_tree,
    chain,
    corona,
    has_dominant_attachments,
    needs_local_landmark,
    path_product_generator,
    rooted_product_family,
    rooted_product_uniform,
)
from .verify import (
    VerificationReport,
    block_formula_report,
    chain_report,
    closed_form_dim_star,
    corona_report,
    extremal_report,
    k1_lemma_check,
    lower_bound_report,
    main_equality_report,
    path_product_bounds_report,
    rooted_family_report,
    tree_dim_report,
    verify_isolation_family,
    verify_tree_realization,
)
from .jsonio import (
    composition_from_json,
    composition_to_json,
    graph_from_json,
    graph_to_json,
    load_graph,
    load_recipe,
)
from . import gallery, schemas

__version__ = "0.1.0"
