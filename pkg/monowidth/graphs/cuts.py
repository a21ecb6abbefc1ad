from beartype import beartype
from beartype.typing import Sequence

from monowidth.graphs.dangling import DanglingGraph
from monowidth.linalg.elimination import gf2_rank_of_rows, rank
from monowidth.linalg.matrix import Matrix, hstack, submatrix
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import IndexRangeError


def _complement(part: Sequence[int], size: int) -> list[int]:
    chosen = set(part)
    if len(chosen) != len(part) or any(not 0 <= v < size for v in chosen):
        raise IndexRangeError(f"{list(part)} is not a set of vertices of a graph with {size} vertices")
    return [v for v in range(size) if v not in chosen]


@beartype
def cut_matrix(graph: DanglingGraph | SymClass, part: Sequence[int]) -> Matrix:
    """Edges across the bipartition ``(part, complement)``.

    Args:
        graph (DanglingGraph | SymClass): Graph or bare adjacency class.
        part (Sequence[int]): Vertices on the first side, in row order.

    Returns:
        Matrix: ``X[i, j]`` is the multiplicity of edges between ``part[i]`` and the ``j``-th vertex of the
        complement (in increasing order).
    """

    adjacency = graph.adjacency if isinstance(graph, DanglingGraph) else graph
    return adjacency.cross(part, _complement(part, adjacency.size))


@beartype
def boundary_cut_matrix(graph: DanglingGraph, part: Sequence[int]) -> Matrix:
    """``(B[part] | X)``: the dangling edges of ``part`` next to the edges leaving it."""

    rows = submatrix(graph.boundary, part, range(graph.ports))
    return hstack(rows, cut_matrix(graph, part))


@beartype
class CutRanks:
    """Memoized ranks of ``(B[S] | X_S)`` for vertex subsets ``S`` given as bitmasks.

    Over GF(2) the rows are packed into integers, boundary bits above the vertex bits, so every rank is a
    short xor-basis computation. With ``use_boundary=False`` the plain cut rank of ``S`` is returned.

    Args:
        graph (DanglingGraph): The graph.
        use_boundary (bool, optional): Include the boundary rows. Defaults to True.
    """

    def __init__(self, graph: DanglingGraph, use_boundary: bool = True) -> None:
        self.graph = graph
        self.use_boundary = use_boundary
        self.size = graph.vertices
        self.full = (1 << self.size) - 1
        self.cache: dict[int, int] = {}
        if graph.field is Field.GF2:
            self.adjacency_bits = graph.adjacency.symmetric.row_bits()
            self.boundary_bits = graph.boundary.row_bits() if use_boundary else [0] * self.size

    def vertices_of(self, mask: int) -> list[int]:
        return [v for v in range(self.size) if mask >> v & 1]

    def __call__(self, mask: int) -> int:
        if mask not in self.cache:
            self.cache[mask] = self._compute(mask)
        return self.cache[mask]

    def _compute(self, mask: int) -> int:
        if self.graph.field is Field.GF2:
            outside = self.full & ~mask
            rows = (
                (self.boundary_bits[v] << self.size) | (self.adjacency_bits[v] & outside)
                for v in range(self.size)
                if mask >> v & 1
            )
            return gf2_rank_of_rows(rows)
        part = self.vertices_of(mask)
        if self.use_boundary:
            return rank(boundary_cut_matrix(self.graph, part))
        return rank(cut_matrix(self.graph, part))
