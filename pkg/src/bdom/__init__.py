"""2-limited dominating broadcasts on subcubic graphs.

Exact solvers, the weight function 9n0 + 5n1 + 4n2 + 3n3 + 2b, local
structure profiles, the two-edge 4-cycle contraction with broadcast lifting,
small-graph enumeration, and a batch verifier for the resulting bounds.
"""

from .broadcast import Broadcast, covered_set, is_dominating, normalize_away_2, union
from .formats import from_graph6, from_sparse6, parse_graph_line, read_graphs, to_graph6, to_sparse6
from .generator import enumerate_connected, named, random_connected_subcubic, random_subcubic
from .canon import canonical_form
from .graph import (
    SubcubicGraph,
    ball2,
    boundary,
    build,
    classify_bad_components,
    closed_neighborhood,
    closure,
    components,
    distance,
    omega,
    set_weight,
    suppress_degree2,
    vertex_weight,
)
from .harness import report, verify_graph, verify_stream
from .reductions import contract_c4, edge_deletion_weight_delta, find_separated_c4, lift_broadcast
from .solver import gamma_brute_force, gamma_exact, solve
from .structure import (
    check_boundary_identity,
    check_chain_inequalities,
    classify_case,
    closure_weight_identity,
    profile,
    removal_identity,
    set_profile,
)

__version__ = "0.1.0"

__all__ = [
    "Broadcast",
    "SubcubicGraph",
    "ball2",
    "boundary",
    "build",
    "canonical_form",
    "check_boundary_identity",
    "check_chain_inequalities",
    "classify_bad_components",
    "classify_case",
    "closed_neighborhood",
    "closure",
    "closure_weight_identity",
    "components",
    "contract_c4",
    "covered_set",
    "distance",
    "edge_deletion_weight_delta",
    "enumerate_connected",
    "find_separated_c4",
    "from_graph6",
    "from_sparse6",
    "gamma_brute_force",
    "gamma_exact",
    "is_dominating",
    "lift_broadcast",
    "named",
    "normalize_away_2",
    "omega",
    "parse_graph_line",
    "profile",
    "random_connected_subcubic",
    "random_subcubic",
    "read_graphs",
    "removal_identity",
    "report",
    "set_profile",
    "set_weight",
    "solve",
    "suppress_degree2",
    "to_graph6",
    "to_sparse6",
    "union",
    "verify_graph",
    "verify_stream",
    "vertex_weight",
]
