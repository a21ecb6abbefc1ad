"""Reading and writing graphs with dangling edges and their rank decompositions."""

import json
from pathlib import Path

import networkx as nx
import pydot
from beartype import beartype
from beartype.typing import Any
from loguru import logger as log

from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.rank_tree import RankDecTree
from monowidth.graphs.recursive import RecRankDec, Shape
from monowidth.linalg.elimination import rank
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CertificateError, InputFormatError


@beartype
def graph_to_json(graph: DanglingGraph) -> dict[str, Any]:
    """``{"vertices": k, "ports": n, "edges": [[u, v, mult]], "boundary": [[vertex, port, mult]]}``."""

    encode = graph.field.encode
    return {
        "vertices": graph.vertices,
        "ports": graph.ports,
        "edges": [[u, v, encode(m)] for u, v, m in graph.edges()],
        "boundary": [[v, p, encode(m)] for v, p, m in graph.boundary_entries()],
    }


@beartype
def graph_from_json(payload: Any, field: Field = Field.GF2) -> DanglingGraph:
    """Read a graph written by :func:`graph_to_json`; ``ports`` and ``boundary`` are optional.

    Raises:
        InputFormatError: The payload is not a graph object.
    """

    if not isinstance(payload, dict) or "vertices" not in payload:
        raise InputFormatError("A graph needs a JSON object with a 'vertices' count")
    vertices = payload["vertices"]
    if not isinstance(vertices, int) or vertices < 0:
        raise InputFormatError(f"'vertices' must be a nonnegative integer, got {vertices!r}")
    return DanglingGraph.from_edges(
        vertices,
        payload.get("edges", []),
        field,
        boundary=payload.get("boundary", []),
        ports=payload.get("ports"),
    )


def _numbers(tokens: list[str], line_number: int) -> list[int | str]:
    values = []
    for token in tokens:
        if token.lstrip("-").isdigit():
            values.append(int(token))
        elif "/" in token:
            values.append(token)
        else:
            raise InputFormatError(f"Line {line_number}: {token!r} is not a number")
    return values


@beartype
def graph_from_text(text: str, field: Field = Field.GF2) -> DanglingGraph:
    """Parse the plain-text edge list format.

    The header ``p <vertices> <ports>`` comes first, followed by ``e u v [mult]`` edge lines and
    ``b vertex port [mult]`` boundary lines. Blank lines and lines starting with ``c`` or ``#`` are skipped.

    Args:
        text (str): File contents.
        field (Field, optional): Scalar field. Defaults to GF(2).

    Raises:
        InputFormatError: A line does not follow the format.

    Returns:
        DanglingGraph: The graph.
    """

    header = None
    edges, boundary = [], []
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "#") or tokens[0].startswith("#"):
            continue
        kind, values = tokens[0], _numbers(tokens[1:], line_number)
        if any(isinstance(value, str) for value in values[:2]):
            raise InputFormatError(f"Line {line_number}: indices must be integers")
        if kind == "p":
            if header is not None or len(values) not in (1, 2):
                raise InputFormatError(f"Line {line_number}: expected a single 'p <vertices> [ports]' header")
            header = values
        elif header is None:
            raise InputFormatError(f"Line {line_number}: the 'p' header must come first")
        elif kind == "e" and len(values) in (2, 3):
            edges.append(values)
        elif kind == "b" and len(values) in (2, 3):
            boundary.append(values)
        else:
            raise InputFormatError(f"Line {line_number}: cannot read {line.strip()!r}")
    if header is None:
        raise InputFormatError("Missing 'p <vertices> <ports>' header")
    ports = header[1] if len(header) == 2 else None
    return DanglingGraph.from_edges(header[0], edges, field, boundary=boundary, ports=ports)


@beartype
def graph_to_text(graph: DanglingGraph) -> str:
    encode = graph.field.encode
    lines = [f"p {graph.vertices} {graph.ports}"]
    lines += [f"e {u} {v} {encode(m)}" for u, v, m in graph.edges()]
    lines += [f"b {v} {p} {encode(m)}" for v, p, m in graph.boundary_entries()]
    return "\n".join(lines) + "\n"


@beartype
def load_graph(path: str | Path, field: Field = Field.GF2) -> DanglingGraph:
    """Load a graph from a ``.json`` file or from the plain-text format otherwise."""

    path = Path(path)
    if not path.is_file():
        raise InputFormatError(f"No such graph file: {path}")
    text = path.read_text()
    if path.suffix == ".json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"{path} is not valid JSON: {e}") from e
        graph = graph_from_json(payload.get("graph", payload) if isinstance(payload, dict) else payload, field)
    else:
        graph = graph_from_text(text, field)
    log.debug(f"Loaded {graph!r} from {path}")
    return graph


@beartype
def tree_to_json(tree: RankDecTree) -> dict[str, Any]:
    """``{"nodes": [...], "edges": [[a, b]], "leaves": {node: vertex}}`` with string node names."""

    return {
        "nodes": [str(node) for node in tree.tree.nodes],
        "edges": [[str(a), str(b)] for a, b in tree.tree.edges],
        "leaves": {str(node): vertex for node, vertex in tree.labels.items()},
    }


@beartype
def tree_from_json(payload: Any) -> RankDecTree:
    if not isinstance(payload, dict) or not {"nodes", "edges", "leaves"} <= set(payload):
        raise CertificateError("A rank decomposition needs 'nodes', 'edges' and 'leaves'")
    tree = nx.Graph()
    tree.add_nodes_from(str(node) for node in payload["nodes"])
    for edge in payload["edges"]:
        if not isinstance(edge, list) or len(edge) != 2:
            raise CertificateError(f"Tree edge {edge!r} must be a pair of node names")
        a, b = str(edge[0]), str(edge[1])
        if a not in tree or b not in tree:
            raise CertificateError(f"Tree edge {edge!r} names an unknown node")
        tree.add_edge(a, b)
    leaves = payload["leaves"]
    if not isinstance(leaves, dict) or any(not isinstance(v, int) for v in leaves.values()):
        raise CertificateError("'leaves' must map node names to vertex indices")
    return RankDecTree(tree, {str(node): vertex for node, vertex in leaves.items()})


def _shape_to_json(shape: Shape) -> Any:
    if isinstance(shape, tuple):
        return [_shape_to_json(shape[0]), _shape_to_json(shape[1])]
    return shape


@beartype
def recursive_to_json(decomposition: RecRankDec) -> dict[str, Any]:
    """Root graph and shape as nested ``[left, right]`` lists of vertex indices."""

    return {"graph": graph_to_json(decomposition.graph), "shape": _shape_to_json(decomposition.shape)}


@beartype
def recursive_from_json(payload: Any, field: Field = Field.GF2) -> RecRankDec:
    if not isinstance(payload, dict) or not {"graph", "shape"} <= set(payload):
        raise CertificateError("A recursive rank decomposition needs 'graph' and 'shape'")
    return RecRankDec(graph_from_json(payload["graph"], field), payload["shape"])


@beartype
def tree_to_dot(tree: RankDecTree, graph: DanglingGraph, name: str = "rank_decomposition") -> pydot.Dot:
    """Undirected DOT drawing with the cut rank of every tree edge as its label."""

    dot = pydot.Dot(name, graph_type="graph")
    dot.set_node_defaults(fontname="Helvetica")
    for node in tree.tree.nodes:
        if node in tree.labels:
            dot.add_node(pydot.Node(str(node), label=f'"{tree.labels[node]}"', shape="box"))
        else:
            dot.add_node(pydot.Node(str(node), label='""', shape="point"))
    for (a, b), cut_rank in tree.edge_ranks(graph).items():
        dot.add_edge(pydot.Edge(str(a), str(b), label=str(cut_rank)))
    return dot


@beartype
def recursive_to_dot(decomposition: RecRankDec, name: str = "recursive_rank_decomposition") -> pydot.Dot:
    """Rooted DOT drawing; each edge is labelled with the rank of the child's derived boundary."""

    dot = pydot.Dot(name, graph_type="digraph")
    dot.set_node_defaults(fontname="Helvetica")
    labels = decomposition.labels()
    for path, (vertices, node_graph) in labels.items():
        text = str(vertices[0]) if len(vertices) == 1 else ""
        dot.add_node(pydot.Node(path.replace(".", "_"), label=f'"{text}"', shape="box" if text else "circle"))
        parent = path.rpartition(".")[0]
        if parent:
            edge_label = str(rank(node_graph.boundary))
            dot.add_edge(pydot.Edge(parent.replace(".", "_"), path.replace(".", "_"), label=edge_label))
    return dot
