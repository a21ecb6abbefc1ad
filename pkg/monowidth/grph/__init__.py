from monowidth.grph.bounded import (
    BoundedGraph,
    compose,
    cups,
    equal,
    find_permutation,
    from_dangling,
    glue,
    invariants_equal,
    tensor,
    tensor_graphs,
    to_dangling,
)
from monowidth.grph.io import bounded_from_json, bounded_to_json
from monowidth.grph.prop import GRAPH_GENERATOR_NAMES, GrphProp, graph_generator, graph_generator_name
from monowidth.grph.translate import (
    MwdBounds,
    absorb_feedback,
    lower_bound_witness,
    monoidal_to_rank,
    mwd_graph_bounds,
    rank_to_monoidal,
    rebase_boundary,
)

__all__ = [
    "GRAPH_GENERATOR_NAMES",
    "BoundedGraph",
    "GrphProp",
    "MwdBounds",
    "absorb_feedback",
    "bounded_from_json",
    "bounded_to_json",
    "compose",
    "cups",
    "equal",
    "find_permutation",
    "from_dangling",
    "glue",
    "graph_generator",
    "graph_generator_name",
    "invariants_equal",
    "lower_bound_witness",
    "monoidal_to_rank",
    "mwd_graph_bounds",
    "rank_to_monoidal",
    "rebase_boundary",
    "tensor",
    "tensor_graphs",
    "to_dangling",
]
