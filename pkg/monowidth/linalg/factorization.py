from beartype import beartype
from beartype.typing import NamedTuple
from loguru import logger as log

from monowidth.linalg.elimination import left_inverse, row_echelon
from monowidth.linalg.matrix import Matrix, hstack, submatrix, transpose
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import ShapeError


class RankFactorization(NamedTuple):
    """``a = left · right`` through ``rank(a)`` wires; ``is_natural`` tells whether both factors stay in ℕ."""

    left: Matrix
    right: Matrix
    is_natural: bool

    @property
    def inner(self) -> int:
        return self.left.cols


class CoupledFactorization(NamedTuple):
    """Factors with ``(a1|c) = l1·(n1 | s·l2ᵀ)`` and ``(a2|cᵀ) = l2·(n2 | sᵀ·l1ᵀ)``."""

    l1: Matrix
    n1: Matrix
    l2: Matrix
    n2: Matrix
    s: Matrix
    is_natural: bool

    @property
    def ranks(self) -> tuple[int, int]:
        return self.l1.cols, self.l2.cols


def _column_basis_factorization(a: Matrix) -> tuple[Matrix, Matrix]:
    echelon = row_echelon(a)
    left = submatrix(a, range(a.rows), echelon.pivots)
    right = submatrix(echelon.reduced, range(echelon.rank), range(a.cols))
    return left, right


@beartype
def full_rank_factorization(a: Matrix) -> RankFactorization:
    """Factor ``a = l · n`` with inner dimension ``rank(a)``, ``l`` of full column rank and ``n`` of full row rank.

    ``l`` is the set of pivot columns of ``a`` and ``n`` the nonzero rows of its reduced echelon form. In rational
    mode the transposed construction (pivot rows of ``a`` on the right) is tried as well and preferred whenever
    it keeps both factors natural while the first does not.

    Args:
        a (Matrix): Matrix to factor.

    Returns:
        RankFactorization: The two factors and whether they are natural.
    """

    left, right = _column_basis_factorization(a)
    natural = left.is_natural() and right.is_natural()
    if a.field is Field.RAT and not natural and a.is_natural():
        right_t, left_t = _column_basis_factorization(transpose(a))
        candidate_left, candidate_right = transpose(left_t), transpose(right_t)
        if candidate_left.is_natural() and candidate_right.is_natural():
            left, right, natural = candidate_left, candidate_right, True
    if not natural:
        log.debug(f"Full rank factorization of a {a.rows}x{a.cols} matrix leaves the natural numbers")
    return RankFactorization(left, right, natural)


@beartype
def coupled_rank_factorization(a1: Matrix, a2: Matrix, c: Matrix) -> CoupledFactorization:
    """Coupled rank factorizations of ``(a1|c)`` and ``(a2|cᵀ)`` sharing the core ``s``.

    Both blocks are factored independently; ``s = E1 · c · E2ᵀ`` for left inverses ``E1`` of ``l1`` and ``E2``
    of ``l2``. The column space of ``c`` lies in that of ``l1`` and its row space in that of ``l2ᵀ``, hence
    ``l1 · s · l2ᵀ = c``.

    Args:
        a1 (Matrix): ``k1×n`` boundary block of the first part.
        a2 (Matrix): ``k2×n`` boundary block of the second part.
        c (Matrix): ``k1×k2`` matrix of edges between the parts.

    Returns:
        CoupledFactorization: ``l1, n1, l2, n2, s`` and whether every factor is natural.
    """

    if a1.rows != c.rows or a2.rows != c.cols:
        raise ShapeError(f"Cannot couple blocks of shapes {a1.shape}, {a2.shape} through c of shape {c.shape}")

    first = full_rank_factorization(hstack(a1, c))
    second = full_rank_factorization(hstack(a2, transpose(c)))
    l1, l2 = first.left, second.left
    n1 = submatrix(first.right, range(first.inner), range(a1.cols))
    n2 = submatrix(second.right, range(second.inner), range(a2.cols))
    s = left_inverse(l1) @ c @ transpose(left_inverse(l2))

    natural = all(m.is_natural() for m in (l1, n1, l2, n2, s))
    if not natural and a1.field is Field.RAT:
        log.warning("Coupled rank factorization leaves the natural numbers; factors are rational")
    return CoupledFactorization(l1, n1, l2, n2, s, natural)
