from beartype import beartype
from beartype.typing import Any

from monowidth.bialg.prop import GENERATOR_NAMES, generator
from monowidth.decomposition.tree import PropInterface
from monowidth.grph.bounded import BoundedGraph, compose, equal, tensor
from monowidth.grph.io import bounded_from_json, bounded_to_json
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CertificateError, InputFormatError

GRAPH_GENERATOR_NAMES = ("cup", "vertex", *GENERATOR_NAMES)


@beartype
def graph_generator(name: str, field: Field) -> BoundedGraph:
    """``cup``, ``vertex`` or one of the matrix generators embedded without vertices."""

    if name == "cup":
        return BoundedGraph.cup(field)
    if name == "vertex":
        return BoundedGraph.vertex(field)
    if name in GENERATOR_NAMES:
        return BoundedGraph.embed(generator(name, field))
    raise InputFormatError(f"Unknown generator {name!r}, expected one of {', '.join(GRAPH_GENERATOR_NAMES)}")


@beartype
def graph_generator_name(g: BoundedGraph) -> str | None:
    for name in GRAPH_GENERATOR_NAMES:
        if g == graph_generator(name, g.field):
            return name
    return None


@beartype
class GrphProp(PropInterface):
    """The prop of graphs with boundaries.

    Every morphism is an atom and weighs its number of vertices, so vertexless wiring is free and only cuts and
    vertices count towards the width.

    Args:
        field (Field): Scalar field of the components.
        equality_cap (int, optional): Vertex cap of the permutation search in :meth:`equal`. Defaults to 10.
    """

    name = "grph"

    def __init__(self, field: Field, equality_cap: int = 10) -> None:
        self.field = field
        self.equality_cap = equality_cap

    def dom(self, f: BoundedGraph) -> int:
        return f.n

    def cod(self, f: BoundedGraph) -> int:
        return f.m

    def compose(self, f: BoundedGraph, g: BoundedGraph) -> BoundedGraph:
        return compose(f, g)

    def tensor(self, f: BoundedGraph, g: BoundedGraph) -> BoundedGraph:
        return tensor(f, g)

    def equal(self, f: BoundedGraph, g: BoundedGraph) -> bool:
        return equal(f, g, self.equality_cap)

    def identity(self, n: int) -> BoundedGraph:
        return BoundedGraph.identity(n, self.field)

    def is_atom(self, f: Any) -> bool:
        return isinstance(f, BoundedGraph) and f.field is self.field

    def atom_weight(self, f: BoundedGraph) -> int:
        return f.k

    def atom_label(self, f: BoundedGraph) -> str:
        name = graph_generator_name(f)
        return name if name is not None else f"graph {f.n}->{f.m} k={f.k}"

    def encode_atom(self, f: BoundedGraph) -> Any:
        name = graph_generator_name(f)
        return name if name is not None else bounded_to_json(f)

    def decode_atom(self, payload: Any) -> BoundedGraph:
        if isinstance(payload, str):
            return graph_generator(payload, self.field)
        if isinstance(payload, dict):
            return bounded_from_json(payload, self.field)
        raise CertificateError(f"Cannot read grph leaf {payload!r}")
