from fractions import Fraction

import numpy as np
from beartype import beartype
from beartype.typing import Any, Iterable, Sequence

from monowidth.linalg.scalars import Field, is_natural
from monowidth.utils.errors import IndexRangeError, InputFormatError, ShapeError


@beartype
class Matrix:
    """Immutable dense matrix over GF(2) or the rationals.

    Zero-row and zero-column matrices are legal: they are the morphisms to and from the monoidal unit. GF(2)
    entries are stored as ``uint8`` bits, rational entries as ``Fraction`` objects in a numpy object array.
    """

    __slots__ = ("_data", "_field", "_hash")

    def __init__(self, data: np.ndarray, field: Field) -> None:
        if data.ndim != 2:
            raise ShapeError(f"Matrix data must be two-dimensional, got shape {data.shape}")
        if field is Field.GF2 and data.dtype != np.uint8:
            data = (np.asarray(data, dtype=np.int64) % 2).astype(np.uint8)
        elif field is Field.RAT and data.dtype != object:
            data = _to_fractions(data)
        data.flags.writeable = False
        self._data = data
        self._field = field
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]], field: Field, cols: int | None = None) -> "Matrix":
        """Build a matrix from nested row sequences.

        Args:
            rows (Iterable[Iterable[Any]]): Row-major entries; ints, bools, Fractions or numeric strings.
            field (Field): Scalar field.
            cols (int | None, optional): Column count, required when there are no rows. Defaults to None.

        Returns:
            Matrix: The matrix.
        """

        rows = [[field.coerce(value) for value in row] for row in rows]
        if not rows:
            return cls.zeros(0, cols or 0, field)
        width = len(rows[0])
        if any(len(row) != width for row in rows) or (cols is not None and cols != width):
            raise InputFormatError(f"Ragged matrix rows: lengths {[len(row) for row in rows]}")
        if width == 0:
            return cls.zeros(len(rows), 0, field)
        if field is Field.GF2:
            return cls(np.array(rows, dtype=np.uint8), field)
        data = np.empty((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                data[i, j] = value
        return cls(data, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        if field is Field.GF2:
            return cls(np.zeros((rows, cols), dtype=np.uint8), field)
        data = np.empty((rows, cols), dtype=object)
        data.fill(Fraction(0))
        return cls(data, field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        matrix = cls.zeros(n, n, field).array.copy()
        for i in range(n):
            matrix[i, i] = field.one()
        return cls(matrix, field)

    @classmethod
    def permutation(cls, perm: Sequence[int], field: Field) -> "Matrix":
        """Permutation matrix σ with ``σ[i, perm[i]] = 1``, so that ``(σ·M)[i] = M[perm[i]]``."""

        _check_permutation(perm, len(perm))
        matrix = cls.zeros(len(perm), len(perm), field).array.copy()
        for i, j in enumerate(perm):
            matrix[i, j] = field.one()
        return cls(matrix, field)

    @property
    def field(self) -> Field:
        return self._field

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the entries."""

        return self._data

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __getitem__(self, index: tuple[int, int]) -> int | Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexRangeError(f"Index {index} out of range for shape {self.shape}")
        value = self._data[i, j]
        return int(value) if self._field is Field.GF2 else value

    def tolist(self) -> list[list[int | Fraction]]:
        if self._field is Field.GF2:
            return [[int(value) for value in row] for row in self._data]
        return [list(row) for row in self._data]

    def to_json(self) -> list[list[int | str]]:
        """Rows of JSON-ready entries, see :meth:`Field.encode`."""

        return [[self._field.encode(value) for value in row] for row in self.tolist()]

    def row_bits(self) -> list[int]:
        """GF(2) rows packed into Python integers, bit ``j`` holding column ``j``."""

        if self._field is not Field.GF2:
            raise ShapeError("Packed rows are only defined for GF(2) matrices")
        weights = [1 << j for j in range(self.cols)]
        return [sum(weight for weight, bit in zip(weights, row) if bit) for row in self._data]

    def is_natural(self) -> bool:
        """Whether every entry is a nonnegative integer; always true in GF(2)."""

        if self._field is Field.GF2:
            return True
        return all(is_natural(value) for value in self._data.flat)

    def is_zero(self) -> bool:
        return not any(value != 0 for value in self._data.flat)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self._field)

    def max_entry(self) -> int | Fraction:
        return max((entry for row in self.tolist() for entry in row), default=self._field.zero())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise ShapeError(f"Cannot add matrices of shapes {self.shape} and {other.shape}")
        if self._field is Field.GF2:
            return Matrix(self._data ^ other._data, self._field)
        return Matrix(self._data + other._data, self._field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return False
        return (
            self._field is other._field and self.shape == other.shape and bool(np.array_equal(self._data, other._data))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._field, self.shape, tuple(self._data.flat)))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.to_json()}, field={self._field.value}, shape={self.shape})"

    def cast(self, field: Field) -> "Matrix":
        """Same entries read in another field; rationals reduce mod 2 on the way to GF(2)."""

        if field is self._field:
            return self
        return Matrix.from_rows(self.tolist(), field, cols=self.cols)

    def rank(self) -> int:
        from monowidth.linalg.elimination import rank

        return rank(self)


def _to_fractions(data: np.ndarray) -> np.ndarray:
    converted = np.empty(data.shape, dtype=object)
    for index, value in np.ndenumerate(data):
        converted[index] = Fraction(value)
    return converted


def _check_same_field(a: Matrix, b: Matrix) -> None:
    if a.field is not b.field:
        raise ShapeError(f"Cannot combine a {a.field.value} matrix with a {b.field.value} matrix")


def _check_permutation(perm: Sequence[int], size: int) -> None:
    if sorted(perm) != list(range(size)):
        raise ShapeError(f"{list(perm)} is not a permutation of size {size}")


@beartype
def multiply(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product ``a · b``.

    Args:
        a (Matrix): Left factor of shape ``m×k``.
        b (Matrix): Right factor of shape ``k×n``.

    Returns:
        Matrix: The ``m×n`` product.
    """

    _check_same_field(a, b)
    if a.cols != b.rows:
        raise ShapeError(f"Cannot multiply shapes {a.shape} and {b.shape}")
    if a.cols == 0:
        return Matrix.zeros(a.rows, b.cols, a.field)
    if a.field is Field.GF2:
        product = (a.array.astype(np.int64) @ b.array.astype(np.int64)) & 1
        return Matrix(product.astype(np.uint8), a.field)
    return Matrix(np.dot(a.array, b.array), a.field)


@beartype
def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal matrix ``(a 0; 0 b)``, the monoidal product of matrices."""

    _check_same_field(a, b)
    result = Matrix.zeros(a.rows + b.rows, a.cols + b.cols, a.field).array.copy()
    result[: a.rows, : a.cols] = a.array
    result[a.rows :, a.cols :] = b.array
    return Matrix(result, a.field)


@beartype
def direct_sum_all(matrices: Sequence[Matrix], field: Field) -> Matrix:
    result = Matrix.zeros(0, 0, field)
    for matrix in matrices:
        result = direct_sum(result, matrix)
    return result


@beartype
def transpose(a: Matrix) -> Matrix:
    return Matrix(a.array.T.copy(), a.field)


@beartype
def hstack(*blocks: Matrix) -> Matrix:
    """Horizontal concatenation ``(A | B | ...)``; all blocks need the same row count."""

    if not blocks:
        raise ShapeError("hstack needs at least one block")
    for block in blocks[1:]:
        _check_same_field(blocks[0], block)
        if block.rows != blocks[0].rows:
            raise ShapeError(f"Cannot hstack shapes {[b.shape for b in blocks]}")
    return Matrix(np.hstack([block.array for block in blocks]), blocks[0].field)


@beartype
def vstack(*blocks: Matrix) -> Matrix:
    """Vertical concatenation; all blocks need the same column count."""

    if not blocks:
        raise ShapeError("vstack needs at least one block")
    for block in blocks[1:]:
        _check_same_field(blocks[0], block)
        if block.cols != blocks[0].cols:
            raise ShapeError(f"Cannot vstack shapes {[b.shape for b in blocks]}")
    return Matrix(np.vstack([block.array for block in blocks]), blocks[0].field)


@beartype
def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """Entries of ``a`` at the given row and column indices, in the given order."""

    rows, cols = list(rows), list(cols)
    if any(not 0 <= i < a.rows for i in rows) or any(not 0 <= j < a.cols for j in cols):
        raise IndexRangeError(f"Indices rows={rows} cols={cols} out of range for shape {a.shape}")
    data = a.array[np.ix_(rows, cols)] if rows and cols else Matrix.zeros(len(rows), len(cols), a.field).array
    return Matrix(data.copy(), a.field)


@beartype
def apply_permutation_rows(m: Matrix, perm: Sequence[int]) -> Matrix:
    """``σ·m`` for the permutation matrix σ of ``perm``: row ``i`` of the result is row ``perm[i]`` of ``m``."""

    if len(perm) != m.rows:
        raise ShapeError(f"Permutation of size {len(perm)} does not fit {m.rows} rows")
    _check_permutation(perm, m.rows)
    return submatrix(m, perm, range(m.cols))


@beartype
def conjugate_by_permutation(g: Matrix, perm: Sequence[int]) -> Matrix:
    """``σ·g·σᵀ`` for the permutation matrix σ of ``perm``."""

    if g.rows != g.cols or len(perm) != g.rows:
        raise ShapeError(f"Permutation of size {len(perm)} does not fit square matrix of shape {g.shape}")
    _check_permutation(perm, g.rows)
    return submatrix(g, perm, perm)


@beartype
def inverse_permutation(perm: Sequence[int]) -> list[int]:
    inverse = [0] * len(perm)
    for i, j in enumerate(perm):
        inverse[j] = i
    return inverse
