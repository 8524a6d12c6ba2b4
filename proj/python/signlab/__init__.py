"""Link classification in signed graphs."""

from ._core import (
    GraphValidationError,
    LimitError,
    ParseError,
    SignedGraph,
    SignlabError,
    active_lowerbound_labeling,
    boolean_min_quadratic,
    cccc,
    clique_delta,
    delta2_exact,
    delta_exact,
    erm_partition,
    is_two_balanced,
    is_weakly_balanced,
    least_eigen_classifier,
    load_edge_list,
    min_eigenpair,
    p_random,
    parse_edge_list,
    random_connected_graph,
    run_experiment,
    save_edge_list,
    scccc,
    tree_learner_run,
    two_cluster_labeling,
    weighted_majority_run,
)

__all__ = [name for name in dir() if not name.startswith("_")]
