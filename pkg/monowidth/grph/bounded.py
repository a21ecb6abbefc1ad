import networkx as nx
from beartype import beartype
from beartype.typing import Sequence
from loguru import logger as log
from networkx.algorithms import isomorphism

from monowidth.graphs.dangling import DanglingGraph
from monowidth.linalg.matrix import Matrix, apply_permutation_rows, direct_sum, hstack, vstack
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import CapExceededError, ShapeError

DEFAULT_EQUALITY_CAP = 10


@beartype
class BoundedGraph:
    """Graph with boundaries ``g = ([G], L, R, P, [F]): n → m`` on ``k`` vertices.

    ``L`` (``k×n``) and ``R`` (``k×m``) attach vertices to the left and right ports, ``P`` (``m×n``) counts wires
    passing from left to right ports and ``[F]`` (``m×m``) holds edges between right ports.

    Equality through ``==`` is exact, vertex order included; :func:`equal` decides equality up to a vertex
    permutation.

    Args:
        adjacency (SymClass): ``[G]`` over the vertices.
        left (Matrix): ``L``.
        right (Matrix): ``R``.
        passing (Matrix): ``P``.
        feedback (SymClass): ``[F]`` over the right ports.
    """

    __slots__ = ("adjacency", "left", "right", "passing", "feedback")

    def __init__(self, adjacency: SymClass, left: Matrix, right: Matrix, passing: Matrix, feedback: SymClass) -> None:
        k, n, m = adjacency.size, left.cols, right.cols
        if left.rows != k or right.rows != k or passing.shape != (m, n) or feedback.size != m:
            raise ShapeError(
                f"Inconsistent graph with boundaries: G {adjacency.size}x{adjacency.size}, L {left.shape}, "
                f"R {right.shape}, P {passing.shape}, F {feedback.size}x{feedback.size}"
            )
        if len({adjacency.field, left.field, right.field, passing.field, feedback.field}) != 1:
            raise ShapeError("All components of a graph with boundaries must share the scalar field")
        self.adjacency = adjacency
        self.left = left
        self.right = right
        self.passing = passing
        self.feedback = feedback

    @classmethod
    def embed(cls, matrix: Matrix) -> "BoundedGraph":
        """A vertexless morphism whose wires follow ``matrix``."""

        field = matrix.field
        m, n = matrix.shape
        return cls(
            SymClass.empty(0, field),
            Matrix.zeros(0, n, field),
            Matrix.zeros(0, m, field),
            matrix,
            SymClass.empty(m, field),
        )

    @classmethod
    def identity(cls, n: int, field: Field) -> "BoundedGraph":
        return cls.embed(Matrix.identity(n, field))

    @classmethod
    def cup(cls, field: Field) -> "BoundedGraph":
        """``∪: 0 → 2``, a single edge between the two right ports."""

        return cls(
            SymClass.empty(0, field),
            Matrix.zeros(0, 0, field),
            Matrix.zeros(0, 2, field),
            Matrix.zeros(2, 0, field),
            SymClass(Matrix.from_rows([[0, 1], [0, 0]], field)),
        )

    @classmethod
    def vertex(cls, field: Field) -> "BoundedGraph":
        """``ν: 1 → 0``, one vertex attached to the left port."""

        return cls(
            SymClass.empty(1, field),
            Matrix.identity(1, field),
            Matrix.zeros(1, 0, field),
            Matrix.zeros(0, 1, field),
            SymClass.empty(0, field),
        )

    @property
    def field(self) -> Field:
        return self.passing.field

    @property
    def n(self) -> int:
        return self.left.cols

    @property
    def m(self) -> int:
        return self.right.cols

    @property
    def k(self) -> int:
        return self.adjacency.size

    def permute(self, perm: Sequence[int]) -> "BoundedGraph":
        """Relabel vertices so that new vertex ``i`` is old vertex ``perm[i]``."""

        return BoundedGraph(
            self.adjacency.permute(perm),
            apply_permutation_rows(self.left, perm),
            apply_permutation_rows(self.right, perm),
            self.passing,
            self.feedback,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundedGraph):
            return False
        return (
            self.adjacency == other.adjacency
            and self.left == other.left
            and self.right == other.right
            and self.passing == other.passing
            and self.feedback == other.feedback
        )

    def __hash__(self) -> int:
        return hash((self.adjacency, self.left, self.right, self.passing, self.feedback))

    def __repr__(self) -> str:
        return f"BoundedGraph({self.n}->{self.m}, vertices={self.k}, field={self.field.value})"


@beartype
def compose(g: BoundedGraph, h: BoundedGraph) -> BoundedGraph:
    """Sequential composite ``g ; h``: the right ports of ``g`` are glued to the left ports of ``h``.

    Whatever ``g`` attaches to its right port ``j`` is reattached to what port ``j`` of ``h`` reaches: the
    vertices in column ``j`` of ``L2`` and the right ports in column ``j`` of ``P2``. Vertices of ``g`` come first.

    Args:
        g (BoundedGraph): ``n → m``.
        h (BoundedGraph): ``m → p``.

    Raises:
        ShapeError: ``g`` ends in a different number of ports than ``h`` starts with.

    Returns:
        BoundedGraph: ``n → p`` on ``k1 + k2`` vertices.
    """

    if g.m != h.n:
        raise ShapeError(f"Cannot compose a {g.n}->{g.m} graph with a {h.n}->{h.m} graph")
    field = g.field
    l2, p2 = h.left, h.passing
    f1, f1_sym = g.feedback.rep, g.feedback.symmetric

    adjacency = vstack(
        hstack(g.adjacency.rep, g.right @ l2.T),
        hstack(Matrix.zeros(h.k, g.k, field), h.adjacency.rep + l2 @ f1 @ l2.T),
    )
    return BoundedGraph(
        SymClass(adjacency),
        vstack(g.left, l2 @ g.passing),
        vstack(g.right @ p2.T, h.right + l2 @ f1_sym @ p2.T),
        p2 @ g.passing,
        SymClass(h.feedback.rep + p2 @ f1 @ p2.T),
    )


@beartype
def tensor(g: BoundedGraph, h: BoundedGraph) -> BoundedGraph:
    """Parallel composite: every component is a direct sum, vertices and ports of ``g`` first."""

    return BoundedGraph(
        SymClass(direct_sum(g.adjacency.rep, h.adjacency.rep)),
        direct_sum(g.left, h.left),
        direct_sum(g.right, h.right),
        direct_sum(g.passing, h.passing),
        SymClass(direct_sum(g.feedback.rep, h.feedback.rep)),
    )


@beartype
def tensor_graphs(parts: Sequence[BoundedGraph], field: Field) -> BoundedGraph:
    result = BoundedGraph.identity(0, field)
    for part in parts:
        result = tensor(result, part)
    return result


@beartype
def cups(n: int, field: Field) -> BoundedGraph:
    """``0 → 2n`` with an edge between right ports ``i`` and ``n + i``: ``n`` cups with their ports sorted."""

    if n == 0:
        return BoundedGraph.identity(0, field)
    shuffle = Matrix.zeros(2 * n, 2 * n, field).array.copy()
    for i in range(n):
        shuffle[i, 2 * i] = field.one()
        shuffle[n + i, 2 * i + 1] = field.one()
    return compose(tensor_graphs([BoundedGraph.cup(field)] * n, field), BoundedGraph.embed(Matrix(shuffle, field)))


@beartype
def glue(g1: BoundedGraph, g2: BoundedGraph) -> BoundedGraph:
    """Join two states ``n → 0`` port by port: ``cups(n) ; (g1 ⊗ g2)``.

    A vertex of ``g1`` and a vertex of ``g2`` attached to the same port ``p`` get one edge per pair of
    attachments.
    """

    if g1.m or g2.m or g1.n != g2.n:
        raise ShapeError(f"Can only glue two states over the same ports, got {g1!r} and {g2!r}")
    return compose(cups(g1.n, g1.field), tensor(g1, g2))


@beartype
def from_dangling(graph: DanglingGraph) -> BoundedGraph:
    """The state ``n → 0`` whose left ports are the dangling edges of ``graph``."""

    field = graph.field
    return BoundedGraph(
        graph.adjacency,
        graph.boundary,
        Matrix.zeros(graph.vertices, 0, field),
        Matrix.zeros(0, graph.ports, field),
        SymClass.empty(0, field),
    )


@beartype
def to_dangling(g: BoundedGraph) -> DanglingGraph:
    """``([G], (L | R))``: both sides of the boundary become dangling edges; ``P`` and ``F`` are dropped."""

    return DanglingGraph(g.adjacency, hstack(g.left, g.right))


def _labelled_graph(g: BoundedGraph) -> nx.Graph:
    symmetric = g.adjacency.symmetric
    left, right = g.left.tolist(), g.right.tolist()
    graph = nx.Graph()
    for v in range(g.k):
        graph.add_node(v, signature=(tuple(left[v]), tuple(right[v]), symmetric[v, v]))
    for u in range(g.k):
        for v in range(u + 1, g.k):
            if symmetric[u, v]:
                graph.add_edge(u, v, multiplicity=symmetric[u, v])
    return graph


def _same_ports(g: BoundedGraph, h: BoundedGraph) -> bool:
    return (
        (g.n, g.m, g.k) == (h.n, h.m, h.k)
        and g.field is h.field
        and g.passing == h.passing
        and g.feedback == h.feedback
    )


@beartype
def find_permutation(g: BoundedGraph, h: BoundedGraph, cap: int = DEFAULT_EQUALITY_CAP) -> list[int] | None:
    """A vertex permutation turning ``g`` into ``h``, if one exists.

    Vertices are matched by VF2 on the labelled graphs, each vertex labelled with its rows of ``L`` and ``R``
    and its self-loop count, each edge with its multiplicity.

    Args:
        g (BoundedGraph): First graph.
        h (BoundedGraph): Second graph.
        cap (int, optional): Largest vertex count searched. Defaults to 10.

    Raises:
        CapExceededError: The graphs differ and have more than ``cap`` vertices.

    Returns:
        list[int] | None: ``perm`` with ``g.permute(perm) == h``, or None.
    """

    if not _same_ports(g, h):
        return None
    if g == h:
        return list(range(g.k))
    if g.k > cap:
        log.warning(f"Refusing a permutation search over {g.k} vertices, cap is {cap}")
        raise CapExceededError(f"Permutation equality is capped at {cap} vertices, got {g.k}")
    matcher = isomorphism.GraphMatcher(
        _labelled_graph(g),
        _labelled_graph(h),
        node_match=isomorphism.categorical_node_match("signature", None),
        edge_match=isomorphism.categorical_edge_match("multiplicity", 1),
    )
    if not matcher.is_isomorphic():
        return None
    perm = [0] * g.k
    for g_vertex, h_vertex in matcher.mapping.items():
        perm[h_vertex] = g_vertex
    return perm


@beartype
def equal(g: BoundedGraph, h: BoundedGraph, cap: int = DEFAULT_EQUALITY_CAP) -> bool:
    """Equality up to a permutation of the vertices, see :func:`find_permutation`."""

    return find_permutation(g, h, cap) is not None


@beartype
def invariants_equal(g: BoundedGraph, h: BoundedGraph) -> bool:
    """Non-exact comparison by Weisfeiler-Lehman hashes of the labelled graphs.

    Equal graphs always compare equal; unequal graphs may collide. Usable at any size.
    """

    if not _same_ports(g, h):
        return False
    hashes = []
    for graph in (_labelled_graph(g), _labelled_graph(h)):
        for _, data in graph.nodes(data=True):
            data["label"] = str(data["signature"])
        for _, _, data in graph.edges(data=True):
            data["label"] = str(data["multiplicity"])
        hashes.append(nx.weisfeiler_lehman_graph_hash(graph, node_attr="label", edge_attr="label"))
    return hashes[0] == hashes[1]
