import pydot
from beartype import beartype
from beartype.typing import Any

from monowidth.decomposition.tree import Compose, Decomposition, Leaf, PropInterface, Tensor
from monowidth.utils.errors import CertificateError


@beartype
def decomposition_to_json(d: Decomposition, prop: PropInterface) -> dict[str, Any]:
    """JSON tree ``{"leaf": ..} | {"tensor": [l, r]} | {"compose": {"cut": k, "left": l, "right": r}}``."""

    match d:
        case Leaf(atom=atom):
            return {"leaf": prop.encode_atom(atom)}
        case Tensor(left=left, right=right):
            return {"tensor": [decomposition_to_json(left, prop), decomposition_to_json(right, prop)]}
        case Compose(left=left, cut=cut, right=right):
            return {
                "compose": {
                    "cut": cut,
                    "left": decomposition_to_json(left, prop),
                    "right": decomposition_to_json(right, prop),
                }
            }
    raise TypeError(f"Unknown decomposition node {type(d).__name__}")


@beartype
def decomposition_from_json(payload: Any, prop: PropInterface, path: str = "root") -> Decomposition:
    """Read a decomposition tree written by :func:`decomposition_to_json`.

    Args:
        payload (Any): Parsed JSON value.
        prop (PropInterface): Prop decoding the leaf payloads.
        path (str, optional): Node path used in error messages. Defaults to "root".

    Raises:
        CertificateError: The payload is not a decomposition tree.

    Returns:
        Decomposition: The tree; cut arities are taken as given and checked only on evaluation.
    """

    if not isinstance(payload, dict) or len(payload) != 1:
        raise CertificateError(f"Expected a single-key decomposition node at {path}, got {payload!r}")
    kind, body = next(iter(payload.items()))
    if kind == "leaf":
        return Leaf(prop.decode_atom(body))
    if kind == "tensor":
        if not isinstance(body, list) or len(body) != 2:
            raise CertificateError(f"Tensor node at {path} needs exactly two children")
        return Tensor(
            decomposition_from_json(body[0], prop, f"{path}.L"),
            decomposition_from_json(body[1], prop, f"{path}.R"),
        )
    if kind == "compose":
        if not isinstance(body, dict) or set(body) != {"cut", "left", "right"}:
            raise CertificateError(f"Compose node at {path} needs 'cut', 'left' and 'right'")
        cut = body["cut"]
        if not isinstance(cut, int) or isinstance(cut, bool) or cut < 0:
            raise CertificateError(f"Cut at {path} must be a nonnegative integer, got {cut!r}")
        return Compose(
            decomposition_from_json(body["left"], prop, f"{path}.L"),
            cut,
            decomposition_from_json(body["right"], prop, f"{path}.R"),
        )
    raise CertificateError(f"Unknown decomposition node kind {kind!r} at {path}")


@beartype
def decomposition_to_dot(d: Decomposition, prop: PropInterface, name: str = "decomposition") -> pydot.Dot:
    """Render the tree for inspection; inner nodes read ``⊗`` or ``;k``, leaves the atom name."""

    graph = pydot.Dot(name, graph_type="digraph")
    graph.set_node_defaults(fontname="Helvetica")
    counter = 0

    def add(node: Decomposition) -> str:
        nonlocal counter
        node_id = f"n{counter}"
        counter += 1
        match node:
            case Leaf(atom=atom):
                graph.add_node(pydot.Node(node_id, label=f'"{prop.atom_label(atom)}"', shape="box"))
            case Tensor():
                graph.add_node(pydot.Node(node_id, label='"⊗"', shape="circle"))
            case Compose(cut=cut):
                graph.add_node(pydot.Node(node_id, label=f'";{cut}"', shape="ellipse"))
        for side, child in zip(("L", "R"), node.children()):
            graph.add_edge(pydot.Edge(node_id, add(child), label=side))
        return node_id

    add(d)
    return graph
