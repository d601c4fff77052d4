"""Exact metric, doubly resolving and strong metric dimension of small graphs,
with the circulant Cayley graphs Cay(Z_n, S_k) built in."""

from .budget import SearchBudget
from .errors import BudgetExceededError, DisconnectedGraphError, DomainError, NotApplicableError
from .graph_core import (
    ConnectionSet,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    automorphisms,
    build_circulant,
    build_connection_set,
    build_graph_from_edges,
    cayley_graph,
    chromatic_number,
    clique_number,
    complete_graph,
    cycle_graph,
    is_distance_transitive_desk,
    path_graph,
)
from .resolving import (
    WitnessKind,
    WitnessSet,
    doubly_resolves,
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    metric_representation,
    strongly_resolves,
)
from .solvers import (
    Method,
    Problem,
    SolverReport,
    min_doubly_resolving_set,
    min_resolving_set,
    min_strong_resolving_set_enum,
    min_strong_resolving_set_vc,
    strong_resolving_graph,
    verify_lemma_bounds,
)

__version__ = "0.1.0"
