"""Minimum intervention sets that orient target edges in causal DAGs.

Computes exact minimum-size (and cost-bounded) intervention sets orienting a
requested subset of edges given the ground truth (verification), adaptively
discovers those orientations when the truth is hidden (search), and ships
brute-force oracles plus a synthetic-graph experiment harness.
"""

from .errors import BudgetError, InputError
from .graphs import (
    Dag,
    Pdag,
    TargetEdges,
    generate_synthetic,
    is_chordal,
    lower_bound_instance,
    min_vertex_cover,
    topological_order,
    v_structures,
)
from .hasse import HasseTree, StabInterval, cut_intervals, hasse_diagram, subtree_vertices
from .oracle import OracleBudget, nu1_bruteforce, nuk_bruteforce
from .orient import (
    OrientationResult,
    chain_components,
    covered_edges,
    essential_graph,
    meek_closure,
    oriented_subgraph,
    recover_arcs,
    recover_interventions,
)
from .search import (
    AdaptiveAdversary,
    InterventionOracle,
    SearchTranscript,
    adaptive_adversary_session,
    bounded_labelled_groups,
    random_search_baseline,
    relevant_nodes,
    subset_search,
    weighted_clique_separator,
)
from .stabbing import EulerTour, euler_tour, prepare, prune_supersets, solve, solve_bruteforce
from .verify import (
    CostParams,
    InterventionSet,
    atomic_verifying_set,
    bounded_verifying_set,
    cost_verifying_set,
    forest_subset,
    verify_is_verifying,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
