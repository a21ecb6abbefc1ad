from fractions import Fraction

from beartype import beartype
from beartype.typing import Sequence

from monowidth.linalg.matrix import Matrix, conjugate_by_permutation, submatrix, transpose
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import ShapeError


@beartype
def symmetrize(g: Matrix) -> Matrix:
    """``g + gᵀ``; over GF(2) its diagonal vanishes."""

    if g.rows != g.cols:
        raise ShapeError(f"Adjacency matrices must be square, got shape {g.shape}")
    return g + transpose(g)


@beartype
def sym_class_equal(g: Matrix, h: Matrix) -> bool:
    """Whether ``g`` and ``h`` represent the same adjacency class, i.e. ``g + gᵀ = h + hᵀ``.

    Args:
        g (Matrix): Square representative.
        h (Matrix): Square representative of the same size and field.

    Returns:
        bool: True if both describe the same undirected (multi)graph.
    """

    if g.shape != h.shape:
        raise ShapeError(f"Cannot compare adjacency classes of shapes {g.shape} and {h.shape}")
    return symmetrize(g) == symmetrize(h)


@beartype
class SymClass:
    """Adjacency class ``[G]``: square matrices modulo ``G + Gᵀ = H + Hᵀ``.

    Equality and hashing go through the symmetrization, so edge orientation is immaterial. The stored
    representative is kept as given and is what JSON output shows.
    """

    __slots__ = ("_rep", "_sym")

    def __init__(self, rep: Matrix) -> None:
        self._rep = rep
        self._sym = symmetrize(rep)

    @classmethod
    def empty(cls, size: int, field: Field) -> "SymClass":
        return cls(Matrix.zeros(size, size, field))

    @property
    def rep(self) -> Matrix:
        return self._rep

    @property
    def field(self) -> Field:
        return self._rep.field

    @property
    def size(self) -> int:
        return self._rep.rows

    @property
    def symmetric(self) -> Matrix:
        """Symmetrized matrix ``G + Gᵀ``; off-diagonal entries are edge multiplicities."""

        return self._sym

    def canonical(self) -> Matrix:
        """Upper triangular representative: edges above the diagonal, self-loops halved onto it."""

        n = self.size
        data = Matrix.zeros(n, n, self.field).array.copy()
        for i in range(n):
            for j in range(i + 1, n):
                data[i, j] = self._sym.array[i, j]
            if self.field is Field.RAT:
                data[i, i] = Fraction(self._sym.array[i, i]) / 2
        return Matrix(data, self.field)

    def restrict(self, vertices: Sequence[int]) -> "SymClass":
        """Induced class on the given vertices, in the given order."""

        return SymClass(submatrix(self._rep, vertices, vertices))

    def cross(self, part: Sequence[int], other: Sequence[int]) -> Matrix:
        """Edge multiplicities between two disjoint vertex lists, read from the symmetrization."""

        return submatrix(self._sym, part, other)

    def permute(self, perm: Sequence[int]) -> "SymClass":
        return SymClass(conjugate_by_permutation(self._rep, perm))

    def __add__(self, other: "SymClass") -> "SymClass":
        return SymClass(self._rep + other._rep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymClass):
            return False
        return self._sym == other._sym

    def __hash__(self) -> int:
        return hash(("SymClass", self._sym))

    def __repr__(self) -> str:
        return f"SymClass({self._rep.to_json()}, field={self.field.value})"
