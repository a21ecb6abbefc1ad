from monowidth.decomposition.io import decomposition_from_json, decomposition_to_dot, decomposition_to_json
from monowidth.decomposition.tree import (
    Compose,
    Decomposition,
    Leaf,
    PropInterface,
    Tensor,
    arity,
    compose_all,
    leaves,
    node_at,
    node_count,
    replace_at,
    tensor_all,
)
from monowidth.decomposition.width import evaluate, labelled_nodes, max_node_width, validate, width

__all__ = [
    "Compose",
    "Decomposition",
    "Leaf",
    "PropInterface",
    "Tensor",
    "arity",
    "compose_all",
    "decomposition_from_json",
    "decomposition_to_dot",
    "decomposition_to_json",
    "evaluate",
    "labelled_nodes",
    "leaves",
    "max_node_width",
    "node_at",
    "node_count",
    "replace_at",
    "tensor_all",
    "validate",
    "width",
]
