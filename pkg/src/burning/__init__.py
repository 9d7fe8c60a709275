"""Burning number of graphs: exact search, certified upper bounds, binary-tree extremality."""

from .binary import build_tr, burn_binary_nonextremal, classify_binary
from .domination import bound_domination, bound_radius, distance_dominating_set
from .exact import SearchLimits, brute_force_oracle, burning_number_exact, lower_bound
from .graph import (
    INFINITE,
    Graph,
    RootedTree,
    bfs_distances,
    find_height_vertex,
    graph_metrics,
    parse_graph,
    remove_subtree,
    spanning_tree,
)
from .paths import PathForest, bound_path_forest, bound_theorem3, burn_path_forest, lemma4_feasible
from .report import BoundReport
from .schedule import (
    assignment_to_schedule,
    repair,
    simulate,
    verify_burning,
    verify_covering,
)
from .trees import (
    bound_corollary1,
    bound_theorem2,
    bound_theorem2_simple,
    bound_theorem4,
    cover_with_radii,
    peel_pair,
    peel_single,
    theorem2_params,
)

__all__ = [name for name in dir() if not name.startswith("_")]
