"""Exact Gaussian elimination: packed-bit rows over GF(2), fraction-free (Bareiss) and Gauss-Jordan over ℚ."""

from fractions import Fraction
from math import lcm

from beartype import beartype
from beartype.typing import Iterable, NamedTuple

from monowidth.linalg.matrix import Matrix, hstack, submatrix, transpose
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import ShapeError


class RowEchelon(NamedTuple):
    """Reduced row echelon form together with its pivot columns."""

    reduced: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


@beartype
def gf2_rank_of_rows(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows packed into integers (xor basis keyed by leading bit)."""

    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return len(basis)


@beartype
def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination; all intermediate values stay integral.

    Args:
        rows (list[list[int]]): Row-major integer entries, modified in place.

    Returns:
        int: The rank over ℚ.
    """

    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    previous, rank = 1, 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank]
        for i in range(rank + 1, n_rows):
            row = rows[i]
            factor = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (row[j] * head[col] - factor * head[j]) // previous
            row[col] = 0
        previous = head[col]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _integer_rows(a: Matrix) -> list[list[int]]:
    rows = []
    for row in a.tolist():
        scale = lcm(*(Fraction(value).denominator for value in row)) if row else 1
        rows.append([int(Fraction(value) * scale) for value in row])
    return rows


@beartype
def rank(a: Matrix) -> int:
    """Rank of ``a`` over its field.

    Args:
        a (Matrix): Any matrix, including empty ones.

    Returns:
        int: The rank; ``0`` for empty or zero matrices.
    """

    if a.rows == 0 or a.cols == 0:
        return 0
    if a.field is Field.GF2:
        return gf2_rank_of_rows(a.row_bits())
    return bareiss_rank(_integer_rows(a))


@beartype
def row_echelon(a: Matrix) -> RowEchelon:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Args:
        a (Matrix): Matrix to reduce.

    Returns:
        RowEchelon: The reduced matrix (same shape as ``a``) and the pivot column of each nonzero row.
    """

    if a.field is Field.GF2:
        rows = a.row_bits()
        pivots = []
        for col in range(a.cols):
            bit = 1 << col
            pivot = next((i for i in range(len(pivots), a.rows) if rows[i] & bit), None)
            if pivot is None:
                continue
            r = len(pivots)
            rows[r], rows[pivot] = rows[pivot], rows[r]
            for i in range(a.rows):
                if i != r and rows[i] & bit:
                    rows[i] ^= rows[r]
            pivots.append(col)
        reduced = [[(row >> j) & 1 for j in range(a.cols)] for row in rows]
        return RowEchelon(Matrix.from_rows(reduced, a.field, cols=a.cols), tuple(pivots))

    rows = [list(row) for row in a.tolist()]
    pivots = []
    for col in range(a.cols):
        pivot = next((i for i in range(len(pivots), a.rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        r = len(pivots)
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r]
        inverse = 1 / Fraction(head[col])
        rows[r] = head = [value * inverse for value in head]
        for i in range(a.rows):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [value - factor * pivot_value for value, pivot_value in zip(rows[i], head)]
        pivots.append(col)
    return RowEchelon(Matrix.from_rows(rows, a.field, cols=a.cols), tuple(pivots))


@beartype
def inverse(a: Matrix) -> Matrix:
    """Inverse of a square invertible matrix."""

    if a.rows != a.cols:
        raise ShapeError(f"Only square matrices can be inverted, got shape {a.shape}")
    echelon = row_echelon(hstack(a, Matrix.identity(a.rows, a.field)))
    if echelon.pivots[: a.rows] != tuple(range(a.rows)):
        raise ShapeError(f"Matrix of shape {a.shape} is singular")
    return submatrix(echelon.reduced, range(a.rows), range(a.cols, 2 * a.cols))


@beartype
def independent_rows(a: Matrix) -> tuple[int, ...]:
    """Indices of a maximal set of linearly independent rows, the first ones in row order."""

    return row_echelon(transpose(a)).pivots


@beartype
def left_inverse(a: Matrix) -> Matrix:
    """A matrix ``E`` with ``E · a = I`` for ``a`` of full column rank.

    The inverse of the square block of ``a`` at a maximal independent row set is spread over those columns.
    """

    rows = independent_rows(a)
    if len(rows) != a.cols:
        raise ShapeError(f"Matrix of shape {a.shape} and rank {len(rows)} has no left inverse")
    block_inverse = inverse(submatrix(a, rows, range(a.cols)))
    result = Matrix.zeros(a.cols, a.rows, a.field).array.copy()
    for position, row in enumerate(rows):
        result[:, row] = block_inverse.array[:, position]
    return Matrix(result, a.field)


@beartype
def right_inverse(a: Matrix) -> Matrix:
    """A matrix ``E`` with ``a · E = I`` for ``a`` of full row rank."""

    return transpose(left_inverse(transpose(a)))
