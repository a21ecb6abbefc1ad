from monowidth.bialg.constructions import (
    bound_by_dims,
    copy_decomposition,
    flagged_leaves,
    gamma_decomposition,
    identity_decomposition,
    scalar_decomposition,
    swap_decomposition,
    transpose_decomposition,
    zero_decomposition,
)
from monowidth.bialg.factorize import best_decomposition, rank_decomposition_of_matrix, tensor_factorize
from monowidth.bialg.oracle import WidthOracle, mwd_oracle
from monowidth.bialg.prop import GENERATOR_NAMES, BialgProp, generator, generator_name
from monowidth.bialg.transforms import (
    discard_outputs,
    discard_transform,
    tensor_root_transform,
    zero_inputs,
    zero_transform,
)

__all__ = [
    "GENERATOR_NAMES",
    "BialgProp",
    "WidthOracle",
    "best_decomposition",
    "bound_by_dims",
    "copy_decomposition",
    "discard_outputs",
    "discard_transform",
    "flagged_leaves",
    "gamma_decomposition",
    "generator",
    "generator_name",
    "identity_decomposition",
    "mwd_oracle",
    "rank_decomposition_of_matrix",
    "scalar_decomposition",
    "swap_decomposition",
    "tensor_factorize",
    "tensor_root_transform",
    "transpose_decomposition",
    "zero_decomposition",
    "zero_inputs",
    "zero_transform",
]
