from beartype import beartype
from loguru import logger as log

from monowidth.bialg.constructions import identity_decomposition, scalar_decomposition
from monowidth.bialg.factorize import best_decomposition
from monowidth.bialg.prop import BialgProp, generator
from monowidth.cli.expressions import DiagramExpr, Generator, Parallel, Sequential
from monowidth.decomposition.tree import Compose, Decomposition, Leaf, PropInterface, Tensor, arity
from monowidth.grph.bounded import DEFAULT_EQUALITY_CAP, BoundedGraph
from monowidth.grph.prop import GrphProp
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import ArityError, InputFormatError

PROPS = ("bialg", "grph")


@beartype
def make_prop(prop: str, field: Field, equality_cap: int = DEFAULT_EQUALITY_CAP) -> PropInterface:
    """The prop named ``"bialg"`` or ``"grph"`` over ``field``."""

    if prop == "bialg":
        return BialgProp(field)
    if prop == "grph":
        return GrphProp(field, equality_cap)
    raise InputFormatError(f"Unknown prop {prop!r}, expected one of {', '.join(PROPS)}")


def _generator_matrix(gen: Generator, field: Field) -> Matrix | None:
    match gen.name:
        case "id":
            return Matrix.identity(gen.argument, field)
        case "scalar":
            return Matrix.from_rows([[gen.argument]], field)
        case "mat":
            return Matrix.from_rows([list(row) for row in gen.argument], field)
        case "cup" | "vertex":
            return None
    return generator(gen.name, field)


@beartype
def generator_value(gen: Generator, prop: str, field: Field) -> Matrix | BoundedGraph:
    """Denotation of a single generator: a matrix in ``bialg``, a graph with boundaries in ``grph``.

    Raises:
        InputFormatError: ``cup`` or ``vertex`` used outside ``grph``.
    """

    matrix = _generator_matrix(gen, field)
    if prop == "grph":
        if matrix is None:
            return BoundedGraph.cup(field) if gen.name == "cup" else BoundedGraph.vertex(field)
        return BoundedGraph.embed(matrix)
    if matrix is None:
        raise InputFormatError(f"Generator {gen.name!r} only exists in the grph prop")
    return matrix


def _eval(expr: DiagramExpr, prop: PropInterface, field: Field, path: str) -> Matrix | BoundedGraph:
    match expr:
        case Generator():
            return generator_value(expr, prop.name, field)
        case Sequential(left=left, right=right):
            f = _eval(left, prop, field, f"{path}.L")
            g = _eval(right, prop, field, f"{path}.R")
            if prop.cod(f) != prop.dom(g):
                raise ArityError(
                    f"Cannot compose a {prop.dom(f)}->{prop.cod(f)} diagram "
                    f"with a {prop.dom(g)}->{prop.cod(g)} diagram",
                    path,
                )
            return prop.compose(f, g)
        case Parallel(left=left, right=right):
            return prop.tensor(_eval(left, prop, field, f"{path}.L"), _eval(right, prop, field, f"{path}.R"))
    raise TypeError(f"Unknown expression node {type(expr).__name__}")


@beartype
def eval_expr(expr: DiagramExpr, prop: str = "bialg", field: Field = Field.GF2) -> Matrix | BoundedGraph:
    """Evaluate an expression in a prop.

    Args:
        expr (DiagramExpr): Parsed expression.
        prop (str, optional): ``"bialg"`` for matrices, ``"grph"`` for graphs with boundaries. Defaults to "bialg".
        field (Field, optional): Scalar field. Defaults to Field.GF2.

    Raises:
        ArityError: Two sequential parts do not meet in the same number of wires; carries the expression path.

    Returns:
        Matrix | BoundedGraph: The denotation.
    """

    return _eval(expr, make_prop(prop, field), field, "root")


def _leaf_decomposition(gen: Generator, prop: PropInterface, field: Field) -> Decomposition:
    if prop.name == "grph":
        return Leaf(generator_value(gen, prop.name, field))
    match gen.name:
        case "id":
            return identity_decomposition(gen.argument, field)
        case "scalar":
            return scalar_decomposition(field.coerce(gen.argument), field)
        case "mat":
            return best_decomposition(generator_value(gen, prop.name, field))
    return Leaf(generator_value(gen, prop.name, field))


def _decompose(expr: DiagramExpr, prop: PropInterface, field: Field, path: str) -> Decomposition:
    match expr:
        case Generator():
            return _leaf_decomposition(expr, prop, field)
        case Sequential(left=left, right=right):
            first = _decompose(left, prop, field, f"{path}.L")
            second = _decompose(right, prop, field, f"{path}.R")
            cut, dom = arity(first, prop)[1], arity(second, prop)[0]
            if cut != dom:
                raise ArityError(f"Cannot compose a diagram ending in {cut} wires with one starting in {dom}", path)
            return Compose(first, cut, second)
        case Parallel(left=left, right=right):
            return Tensor(_decompose(left, prop, field, f"{path}.L"), _decompose(right, prop, field, f"{path}.R"))
    raise TypeError(f"Unknown expression node {type(expr).__name__}")


@beartype
def expr_to_decomposition(expr: DiagramExpr, prop: str = "bialg", field: Field = Field.GF2) -> Decomposition:
    """Read the expression as a decomposition tree: ``;`` becomes a cut, ``*`` a tensor node.

    In ``bialg`` every generator is expanded into atoms: ``id n`` into identity leaves, ``scalar k`` into its
    copy/add chain and ``mat`` into :func:`best_decomposition`. In ``grph`` every generator is already an atom.
    """

    decomposition = _decompose(expr, make_prop(prop, field), field, "root")
    log.debug(f"Expression read as a {prop} decomposition")
    return decomposition
