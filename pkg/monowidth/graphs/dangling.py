from fractions import Fraction

import networkx as nx
from beartype import beartype
from beartype.typing import Any, Iterable, Sequence

from monowidth.linalg.matrix import Matrix, apply_permutation_rows, submatrix
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import IndexRangeError, InputFormatError, ShapeError


@beartype
class DanglingGraph:
    """Graph with dangling edges ``Γ = ([G], B)``: an adjacency class over ``k`` vertices and a ``k×n`` boundary.

    ``B[v, p]`` counts the dangling edges joining vertex ``v`` to port ``p``. Simple graphs live over GF(2),
    multigraphs over the rationals.

    Args:
        adjacency (SymClass): Adjacency class ``[G]``.
        boundary (Matrix): Boundary matrix ``B`` with one row per vertex.
    """

    __slots__ = ("_adjacency", "_boundary")

    def __init__(self, adjacency: SymClass, boundary: Matrix) -> None:
        if boundary.rows != adjacency.size:
            raise ShapeError(f"Boundary of shape {boundary.shape} does not fit {adjacency.size} vertices")
        if boundary.field is not adjacency.field:
            raise ShapeError("Adjacency and boundary must share the scalar field")
        self._adjacency = adjacency
        self._boundary = boundary

    @classmethod
    def from_edges(
        cls,
        vertices: int,
        edges: Iterable[Sequence[Any]],
        field: Field = Field.GF2,
        boundary: Iterable[Sequence[Any]] = (),
        ports: int | None = None,
    ) -> "DanglingGraph":
        """Build a graph from edge and dangling-edge lists.

        Args:
            vertices (int): Vertex count ``k``.
            edges (Iterable[Sequence[int]]): ``[u, v]`` or ``[u, v, multiplicity]`` entries; repeats add up.
            field (Field, optional): Scalar field. Defaults to GF(2).
            boundary (Iterable[Sequence[int]], optional): ``[vertex, port]`` or ``[vertex, port, multiplicity]``.
            ports (int | None, optional): Port count; defaults to one more than the largest port used.

        Returns:
            DanglingGraph: The graph.
        """

        edges, boundary = [list(edge) for edge in edges], [list(entry) for entry in boundary]
        used_ports = max((entry[1] + 1 for entry in boundary), default=0)
        ports = used_ports if ports is None else ports
        if ports < used_ports:
            raise InputFormatError(f"Boundary uses port {used_ports - 1} but only {ports} ports are declared")

        adjacency = Matrix.zeros(vertices, vertices, Field.RAT).array.copy()
        for edge in edges:
            if len(edge) not in (2, 3):
                raise InputFormatError(f"Edge {edge} must be [u, v] or [u, v, multiplicity]")
            u, v = edge[0], edge[1]
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise IndexRangeError(f"Edge {edge} leaves the vertex range 0..{vertices - 1}")
            multiplicity = Fraction(edge[2]) if len(edge) == 3 else Fraction(1)
            adjacency[min(u, v), max(u, v)] += multiplicity

        dangling = Matrix.zeros(vertices, ports, Field.RAT).array.copy()
        for entry in boundary:
            if len(entry) not in (2, 3):
                raise InputFormatError(f"Boundary entry {entry} must be [vertex, port] or [vertex, port, mult]")
            v, p = entry[0], entry[1]
            if not (0 <= v < vertices and 0 <= p < ports):
                raise IndexRangeError(f"Boundary entry {entry} leaves the vertex or port range")
            dangling[v, p] += Fraction(entry[2]) if len(entry) == 3 else Fraction(1)

        return cls(SymClass(Matrix(adjacency, Field.RAT).cast(field)), Matrix(dangling, Field.RAT).cast(field))

    @classmethod
    def from_networkx(
        cls, graph: nx.Graph, field: Field = Field.GF2, boundary: Matrix | None = None
    ) -> "DanglingGraph":
        """Graph on the nodes of ``graph`` in sorted order; edge attribute ``multiplicity`` defaults to 1."""

        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = [[index[u], index[v], data.get("multiplicity", 1)] for u, v, data in graph.edges(data=True)]
        result = cls.from_edges(len(nodes), edges, field)
        if boundary is not None:
            result = result.with_boundary(boundary)
        return result

    @property
    def adjacency(self) -> SymClass:
        return self._adjacency

    @property
    def boundary(self) -> Matrix:
        return self._boundary

    @property
    def field(self) -> Field:
        return self._boundary.field

    @property
    def vertices(self) -> int:
        return self._adjacency.size

    @property
    def ports(self) -> int:
        return self._boundary.cols

    def with_boundary(self, boundary: Matrix) -> "DanglingGraph":
        return DanglingGraph(self._adjacency, boundary)

    def without_boundary(self) -> "DanglingGraph":
        return self.with_boundary(Matrix.zeros(self.vertices, 0, self.field))

    def induced(self, vertices: Sequence[int]) -> "DanglingGraph":
        """Subgraph on ``vertices`` (in that order) keeping only their own boundary rows."""

        boundary = submatrix(self._boundary, vertices, range(self.ports))
        return DanglingGraph(self._adjacency.restrict(vertices), boundary)

    def permute(self, perm: Sequence[int]) -> "DanglingGraph":
        """Relabel vertices so that new vertex ``i`` is old vertex ``perm[i]``."""

        return DanglingGraph(self._adjacency.permute(perm), apply_permutation_rows(self._boundary, perm))

    def edges(self) -> list[tuple[int, int, int | Fraction]]:
        """Edges ``(u, v, multiplicity)`` with ``u ≤ v``; self-loops only appear in rational mode."""

        canonical = self._adjacency.canonical()
        return [
            (u, v, canonical[u, v]) for u in range(self.vertices) for v in range(u, self.vertices) if canonical[u, v]
        ]

    def boundary_entries(self) -> list[tuple[int, int, int | Fraction]]:
        return [
            (v, p, self._boundary[v, p])
            for v in range(self.vertices)
            for p in range(self.ports)
            if self._boundary[v, p]
        ]

    def to_networkx(self) -> nx.Graph:
        """Undirected graph with ``multiplicity`` edge attributes; dangling edges are dropped."""

        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertices))
        for u, v, multiplicity in self.edges():
            graph.add_edge(u, v, multiplicity=multiplicity)
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DanglingGraph):
            return False
        return self._adjacency == other._adjacency and self._boundary == other._boundary

    def __hash__(self) -> int:
        return hash((self._adjacency, self._boundary))

    def __repr__(self) -> str:
        return f"DanglingGraph(vertices={self.vertices}, ports={self.ports}, edges={len(self.edges())})"
