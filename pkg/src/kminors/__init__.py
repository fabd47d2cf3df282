"""Exact search and verification tools for complete-graph minors in small graphs."""

from .constructions import (
    FAMILIES,
    FamilySpec,
    gen_amplifier,
    gen_apex_planar,
    gen_complete_bipartite,
    gen_fig1,
    gen_fig1_apex,
    gen_five_k35,
    gen_geodesic,
    gen_random_bipartite_mindegA,
)
from .errors import GraphInputError, GuardExceeded, LemmaViolation, PreconditionError, StructuralError
from .game import build_M, contains_J, six_cluster_around, solve_game, verify_game_lemma
from .graph import (
    Bipartition,
    Graph,
    bipartition_of,
    components,
    contract_into_side,
    contract_set,
    delete_vertices,
    induced_subgraph,
)
from .io import dumps_graph, load_graph, loads_graph, save_graph, to_dot
from .reduction import (
    build_cover_graph,
    chromatic_number,
    feasible_partition,
    find_attachment_system,
    find_kpqr,
)
from .search import (
    Cluster,
    SearchBudget,
    SearchResult,
    add_apex,
    brute_force_t_cluster,
    drop_apex,
    find_t_cluster,
    has_minor,
    reduce_for_minor,
    validate_cluster,
)
from .smallcases import find_small_minor_bipartite

__version__ = "0.1.0"
