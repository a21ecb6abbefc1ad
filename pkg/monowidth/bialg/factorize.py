from beartype import beartype
from beartype.typing import Iterator
from loguru import logger as log

from monowidth.bialg.constructions import bound_by_dims, identity_decomposition, zero_decomposition
from monowidth.decomposition.tree import Compose, Decomposition, tensor_all
from monowidth.linalg.factorization import full_rank_factorization
from monowidth.linalg.matrix import Matrix, submatrix


@beartype
def rank_decomposition_of_matrix(f: Matrix) -> Decomposition:
    """Decomposition of width at most ``rank(f) + 1``: factor ``f = L · N`` through ``rank(f)`` wires.

    Identities become a tensor of identity leaves and rank-zero matrices ``discards ;0 zeros``.

    Args:
        f (Matrix): Matrix to decompose.

    Returns:
        Decomposition: ``bound_by_dims(N) ;r bound_by_dims(L)``.
    """

    if f.rows == 0 or f.cols == 0 or f.shape == (1, 1):
        return bound_by_dims(f)
    if f.is_identity():
        return identity_decomposition(f.rows, f.field)

    factors = full_rank_factorization(f)
    if factors.inner == 0:
        return zero_decomposition(f.rows, f.cols, f.field)
    if not factors.is_natural:
        log.warning(f"Rank factorization of a {f.rows}x{f.cols} matrix leaves ℕ; the certificate has flagged leaves")
    return Compose(bound_by_dims(factors.right), factors.inner, bound_by_dims(factors.left))


def _is_split(f: Matrix, i: int, j: int) -> bool:
    top_right = submatrix(f, range(i), range(j, f.cols))
    bottom_left = submatrix(f, range(i, f.rows), range(j))
    return top_right.is_zero() and bottom_left.is_zero()


def _split_points(f: Matrix) -> Iterator[tuple[int, int]]:
    """Proper split points ``(i, j)``, smallest top-left block first, fewer rows first on ties."""

    m, n = f.shape
    for total in range(1, m + n):
        for i in range(max(0, total - n), min(m, total) + 1):
            j = total - i
            if _is_split(f, i, j):
                yield i, j


@beartype
def tensor_factorize(f: Matrix) -> list[Matrix]:
    """Finest factorization ``f = f_1 ⊗ ... ⊗ f_k`` into ⊗-indecomposable blocks.

    The first split point in :func:`_split_points` order cuts off a block that admits no further split; the
    rest is factored recursively. A ``1×1`` zero matrix becomes ``discard`` followed by ``zero``.

    Args:
        f (Matrix): Matrix to factor.

    Returns:
        list[Matrix]: The factors, in order; their direct sum is ``f``.
    """

    factors = []
    while True:
        split = next(_split_points(f), None)
        if split is None:
            factors.append(f)
            return factors
        i, j = split
        factors.append(submatrix(f, range(i), range(j)))
        f = submatrix(f, range(i, f.rows), range(j, f.cols))


@beartype
def best_decomposition(f: Matrix) -> Decomposition:
    """Tensor of rank decompositions of the ⊗-factors; width at most ``max_i rank(f_i) + 1``.

    Args:
        f (Matrix): Matrix to decompose.

    Returns:
        Decomposition: Right-nested tensor over :func:`tensor_factorize`.
    """

    factors = tensor_factorize(f)
    log.debug(f"Tensor factors of shapes {[factor.shape for factor in factors]}")
    return tensor_all([rank_decomposition_of_matrix(factor) for factor in factors])
