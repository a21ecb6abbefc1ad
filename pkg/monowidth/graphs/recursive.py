import networkx as nx
from beartype import beartype
from beartype.typing import Any, Iterator
from loguru import logger as log

from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.rank_tree import RankDecTree, rank_dec_width
from monowidth.linalg.elimination import rank
from monowidth.linalg.matrix import hstack, submatrix, transpose
from monowidth.utils.errors import CertificateError, IndexRangeError, InputFormatError, WidthContractError

Shape = Any  # vertex index, pair of shapes, or None for the empty graph


@beartype
def shape_vertices(shape: Shape) -> list[int]:
    """Leaf vertices of a shape in left-to-right order."""

    if shape is None:
        return []
    if isinstance(shape, int):
        return [shape]
    return shape_vertices(shape[0]) + shape_vertices(shape[1])


def _normalize(shape: Shape) -> Shape:
    if shape is None or isinstance(shape, int) and not isinstance(shape, bool):
        return shape
    if isinstance(shape, (list, tuple)) and len(shape) == 2:
        return _normalize(shape[0]), _normalize(shape[1])
    raise CertificateError(f"Malformed decomposition shape {shape!r}")


def _steps(path: str) -> list[str]:
    parts = path.split(".")
    if parts[0] != "root" or any(step not in ("L", "R") for step in parts[1:]):
        raise IndexRangeError(f"Malformed subtree path {path!r}, expected e.g. 'root.L.R'")
    return parts[1:]


@beartype
class RecRankDec:
    """Recursive rank decomposition: a root graph ``Γ`` and a rooted binary shape over its vertices.

    Node labels are derived, never stored. A node over ``Γ' = ([G'], B')`` with children on ``V1`` and ``V2``
    passes ``([G'|V1], (A1 | C))`` and ``([G'|V2], (A2 | Cᵀ))`` down, where ``Ai`` are the rows of ``B'`` at ``Vi``
    and ``C`` counts the edges between ``V1`` and ``V2``. Every node graph lists its vertices in leaf order.

    Args:
        graph (DanglingGraph): Root graph ``Γ``.
        shape (Shape): Vertex index, nested pairs, or None for the empty graph.
    """

    def __init__(self, graph: DanglingGraph, shape: Shape) -> None:
        shape = _normalize(shape)
        if sorted(shape_vertices(shape)) != list(range(graph.vertices)):
            raise CertificateError(f"Shape leaves {shape_vertices(shape)} do not cover the {graph.vertices} vertices")
        self.graph = graph
        self.shape = shape
        self._labels: dict[str, tuple[list[int], DanglingGraph]] | None = None

    def with_graph(self, graph: DanglingGraph) -> "RecRankDec":
        """Same shape over a new root graph on the same vertices."""

        return RecRankDec(graph, self.shape)

    def leaf_order(self) -> list[int]:
        return shape_vertices(self.shape)

    def subshape(self, path: str) -> Shape:
        node = self.shape
        for step in _steps(path):
            if not isinstance(node, tuple):
                raise IndexRangeError(f"Subtree path {path!r} descends below a leaf")
            node = node[0 if step == "L" else 1]
        return node

    def paths(self) -> Iterator[str]:
        stack = [("root", self.shape)]
        while stack:
            path, node = stack.pop()
            if node is None:
                continue
            yield path
            if isinstance(node, tuple):
                stack.append((f"{path}.R", node[1]))
                stack.append((f"{path}.L", node[0]))

    def labels(self) -> dict[str, tuple[list[int], DanglingGraph]]:
        """Derived node graphs by path, each with the root vertices it covers."""

        if self._labels is None:
            labels = {}
            order = self.leaf_order()

            def derive(path: str, node: Shape, vertices: list[int], graph: DanglingGraph) -> None:
                labels[path] = (vertices, graph)
                if not isinstance(node, tuple):
                    return
                split = len(shape_vertices(node[0]))
                first, second = list(range(split)), list(range(split, graph.vertices))
                cross = graph.adjacency.cross(first, second)
                ports = range(graph.ports)
                left = DanglingGraph(
                    graph.adjacency.restrict(first), hstack(submatrix(graph.boundary, first, ports), cross)
                )
                right = DanglingGraph(
                    graph.adjacency.restrict(second), hstack(submatrix(graph.boundary, second, ports), transpose(cross))
                )
                derive(f"{path}.L", node[0], vertices[:split], left)
                derive(f"{path}.R", node[1], vertices[split:], right)

            if self.shape is not None:
                derive("root", self.shape, order, self.graph.induced(order))
            self._labels = labels
        return self._labels

    def node_graph(self, path: str) -> DanglingGraph:
        labels = self.labels()
        if path not in labels:
            raise IndexRangeError(f"No subtree at {path!r}")
        return labels[path][1]

    def __repr__(self) -> str:
        return f"RecRankDec(shape={self.shape!r}, vertices={self.graph.vertices}, ports={self.graph.ports})"


@beartype
def rec_width(decomposition: RecRankDec) -> int:
    """Largest rank of a derived boundary over all subtrees; ``rank(B)`` alone for the empty graph.

    Args:
        decomposition (RecRankDec): Recursive rank decomposition.

    Returns:
        int: The width.
    """

    if decomposition.shape is None:
        return rank(decomposition.graph.boundary)
    return max(rank(graph.boundary) for _, graph in decomposition.labels().values())


@beartype
def subtree_boundary_rank(decomposition: RecRankDec, path: str) -> tuple[int, int]:
    """Both sides of the boundary rank identity at a subtree.

    The derived boundary ``B'`` of the subtree on ``V'`` has the same rank as ``(A' | C_Lᵀ | C_R)``, assembled
    from the root boundary rows ``A'`` at ``V'`` and the edges from ``V'`` to the vertices left and right of it
    in leaf order.

    Args:
        decomposition (RecRankDec): Recursive rank decomposition.
        path (str): Subtree path, e.g. ``"root.L.R"``.

    Returns:
        tuple[int, int]: ``(rank(B'), rank(A' | C_Lᵀ | C_R))``.
    """

    vertices, graph = decomposition.labels().get(path, (None, None))
    if graph is None:
        raise IndexRangeError(f"No subtree at {path!r}")
    order = decomposition.leaf_order()
    start = order.index(vertices[0])
    before, after = order[:start], order[start + len(vertices) :]
    root = decomposition.graph
    assembled = hstack(
        submatrix(root.boundary, vertices, range(root.ports)),
        root.adjacency.cross(vertices, before),
        root.adjacency.cross(vertices, after),
    )
    return rank(graph.boundary), rank(assembled)


def _min_vertex(shape: Shape) -> int:
    return min(shape_vertices(shape))


@beartype
def to_recursive(tree: RankDecTree, graph: DanglingGraph) -> RecRankDec:
    """Root a rank decomposition by subdividing the tree edge at the leaf of vertex 0.

    Inner nodes of degree 2 are passed through and children are ordered by their smallest vertex.

    Args:
        tree (RankDecTree): Rank decomposition of the graph underlying ``graph``.
        graph (DanglingGraph): Graph with dangling edges.

    Raises:
        WidthContractError: The result is wider than ``rank_dec_width + rank(B)``.

    Returns:
        RecRankDec: The rooted decomposition.
    """

    tree.validate(graph)
    if graph.vertices == 0:
        return RecRankDec(graph, None)
    if graph.vertices == 1:
        return RecRankDec(graph, 0)

    leaf_of = {vertex: node for node, vertex in tree.labels.items()}
    start = leaf_of[0]
    (neighbour,) = tree.tree.neighbors(start)

    def build(node: Any, parent: Any) -> Shape:
        if node in tree.labels:
            return tree.labels[node]
        children = sorted(
            (build(child, node) for child in tree.tree.neighbors(node) if child != parent), key=_min_vertex
        )
        return children[0] if len(children) == 1 else (children[0], children[1])

    result = RecRankDec(graph, (0, build(neighbour, start)))
    bound = rank_dec_width(graph, tree) + rank(graph.boundary)
    if rec_width(result) > bound:
        raise WidthContractError(f"Rooted decomposition has width {rec_width(result)} above the bound {bound}")
    return result


@beartype
def to_rank_dec(decomposition: RecRankDec) -> RankDecTree:
    """Forget the labels and smooth the root into an edge.

    Raises:
        InputFormatError: The graph has no vertices.
        WidthContractError: The tree is wider than the recursive decomposition.

    Returns:
        RankDecTree: An unrooted rank decomposition of the underlying graph.
    """

    shape = decomposition.shape
    if shape is None:
        raise InputFormatError("The empty graph has no leaves to build a rank decomposition from")

    tree = nx.Graph()
    labels = {}
    counter = 0

    def build(node: Shape) -> str:
        nonlocal counter
        if isinstance(node, int):
            name = f"v{node}"
            labels[name] = node
            tree.add_node(name)
            return name
        name = f"t{counter}"
        counter += 1
        tree.add_node(name)
        tree.add_edge(name, build(node[0]))
        tree.add_edge(name, build(node[1]))
        return name

    if isinstance(shape, int):
        build(shape)
    else:
        tree.add_edge(build(shape[0]), build(shape[1]))

    result = RankDecTree(tree, labels)
    width = rank_dec_width(decomposition.graph, result)
    if width > rec_width(decomposition):
        raise WidthContractError(f"Unrooted decomposition has width {width} above {rec_width(decomposition)}")
    log.debug(f"Unrooted decomposition of width {width}")
    return result
