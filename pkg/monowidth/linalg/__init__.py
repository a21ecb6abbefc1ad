from monowidth.linalg.elimination import inverse, left_inverse, rank, right_inverse, row_echelon
from monowidth.linalg.factorization import (
    CoupledFactorization,
    RankFactorization,
    coupled_rank_factorization,
    full_rank_factorization,
)
from monowidth.linalg.matrix import (
    Matrix,
    apply_permutation_rows,
    conjugate_by_permutation,
    direct_sum,
    direct_sum_all,
    hstack,
    inverse_permutation,
    multiply,
    submatrix,
    transpose,
    vstack,
)
from monowidth.linalg.natfactor import min_nat_factor_rank
from monowidth.linalg.scalars import Field, is_natural
from monowidth.linalg.symclass import SymClass, sym_class_equal, symmetrize

__all__ = [
    "CoupledFactorization",
    "Field",
    "Matrix",
    "RankFactorization",
    "SymClass",
    "apply_permutation_rows",
    "conjugate_by_permutation",
    "coupled_rank_factorization",
    "direct_sum",
    "direct_sum_all",
    "full_rank_factorization",
    "hstack",
    "inverse",
    "inverse_permutation",
    "is_natural",
    "left_inverse",
    "min_nat_factor_rank",
    "multiply",
    "rank",
    "right_inverse",
    "row_echelon",
    "submatrix",
    "sym_class_equal",
    "symmetrize",
    "transpose",
    "vstack",
]
