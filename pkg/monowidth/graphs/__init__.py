from monowidth.graphs.cuts import CutRanks, boundary_cut_matrix, cut_matrix
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.families import (
    FAMILIES,
    all_simple_graphs,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    random_boundary,
    random_graph,
)
from monowidth.graphs.io import (
    graph_from_json,
    graph_from_text,
    graph_to_json,
    graph_to_text,
    load_graph,
    recursive_from_json,
    recursive_to_dot,
    recursive_to_json,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from monowidth.graphs.rank_tree import RankDecTree, rank_dec_width
from monowidth.graphs.recursive import (
    RecRankDec,
    rec_width,
    shape_vertices,
    subtree_boundary_rank,
    to_rank_dec,
    to_recursive,
)
from monowidth.graphs.solver import SubsetDP, cut_rank_table, rrwd_exact, rwd_enumerate_oracle, rwd_exact

__all__ = [
    "FAMILIES",
    "CutRanks",
    "DanglingGraph",
    "RankDecTree",
    "RecRankDec",
    "SubsetDP",
    "all_simple_graphs",
    "boundary_cut_matrix",
    "complete_graph",
    "cut_matrix",
    "cut_rank_table",
    "cycle_graph",
    "edgeless_graph",
    "graph_from_json",
    "graph_from_text",
    "graph_to_json",
    "graph_to_text",
    "load_graph",
    "path_graph",
    "random_boundary",
    "random_graph",
    "rank_dec_width",
    "rec_width",
    "recursive_from_json",
    "recursive_to_dot",
    "recursive_to_json",
    "rrwd_exact",
    "rwd_enumerate_oracle",
    "rwd_exact",
    "shape_vertices",
    "subtree_boundary_rank",
    "to_rank_dec",
    "to_recursive",
    "tree_from_json",
    "tree_to_dot",
    "tree_to_json",
]
