"""Translations between recursive rank decompositions and monoidal decompositions of graphs with boundaries."""

from fractions import Fraction

from beartype import beartype
from beartype.typing import NamedTuple
from loguru import logger as log

from monowidth.decomposition.tree import Compose, Decomposition, Leaf, Tensor
from monowidth.decomposition.width import width
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.recursive import RecRankDec, Shape, rec_width, shape_vertices
from monowidth.graphs.solver import DEFAULT_VERTEX_CAP, rrwd_exact
from monowidth.grph.bounded import BoundedGraph, compose, find_permutation, from_dangling, tensor, to_dangling
from monowidth.grph.prop import GrphProp
from monowidth.linalg.elimination import rank
from monowidth.linalg.factorization import coupled_rank_factorization
from monowidth.linalg.matrix import Matrix, hstack, inverse_permutation, submatrix, vstack
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import CertificateError, FieldModeError, ShapeError, WidthContractError


def _shift(shape: Shape, offset: int) -> Shape:
    if shape is None:
        return None
    if isinstance(shape, int):
        return shape + offset
    return _shift(shape[0], offset), _shift(shape[1], offset)


def _join(first: Shape, second: Shape) -> Shape:
    if first is None:
        return second
    if second is None:
        return first
    return first, second


def _chain(k: int) -> Shape:
    """Left-nested shape over ``0..k-1``."""

    if k == 0:
        return None
    shape = 0
    for v in range(1, k):
        shape = (shape, v)
    return shape


def _relabel(shape: Shape, mapping: list[int]) -> Shape:
    if shape is None:
        return None
    if isinstance(shape, int):
        return mapping[shape]
    return _relabel(shape[0], mapping), _relabel(shape[1], mapping)


@beartype
def rebase_boundary(decomposition: RecRankDec, m: Matrix, full_rank: bool = False) -> RecRankDec:
    """The same shape over the root graph with boundary ``B·M``.

    The width cannot grow. When ``M`` has full row rank, ``B`` is recovered from ``B·M`` and the width is unchanged.

    Args:
        decomposition (RecRankDec): Decomposition over ``([G], B)``.
        m (Matrix): ``M`` with one row per port of ``B``.
        full_rank (bool, optional): Require full row rank and equal widths. Defaults to False.

    Raises:
        ShapeError: ``M`` does not fit ``B``, or lacks full row rank when ``full_rank`` is set.
        WidthContractError: The width relation fails.

    Returns:
        RecRankDec: Decomposition over ``([G], B·M)``.
    """

    graph = decomposition.graph
    if graph.ports != m.rows:
        raise ShapeError(f"Cannot rebase a boundary with {graph.ports} ports through a matrix of shape {m.shape}")
    if full_rank and rank(m) != m.rows:
        raise ShapeError(f"Rebasing matrix of shape {m.shape} does not have full row rank")

    rebased = decomposition.with_graph(graph.with_boundary(graph.boundary @ m))
    before, after = rec_width(decomposition), rec_width(rebased)
    if after > before or (full_rank and after != before):
        raise WidthContractError(f"Rebasing the boundary moved the width from {before} to {after}")
    return rebased


@beartype
def absorb_feedback(decomposition: RecRankDec, f: Matrix, p: Matrix) -> RecRankDec:
    """Absorb the port edges ``[F]`` of a vertexless morphism composed in front of ``([G], (L | R))``.

    The new root graph is ``([G + L·F·Lᵀ], (L | R + L·(F + Fᵀ)·Pᵀ))`` and the shape is kept;
    the width cannot grow.

    Args:
        decomposition (RecRankDec): Decomposition over ``([G], (L | R))``; ``L`` has as many columns as ``F``.
        f (Matrix): Square feedback representative ``F``.
        p (Matrix): Passing wires ``P`` of the graph, one row per column of ``R``.

    Raises:
        ShapeError: ``F`` or ``P`` do not fit the boundary.
        WidthContractError: The width grew.

    Returns:
        RecRankDec: Decomposition over the new root graph.
    """

    graph = decomposition.graph
    left_ports = f.rows
    right_ports = graph.ports - left_ports
    if f.rows != f.cols or right_ports < 0 or p.shape != (right_ports, left_ports):
        raise ShapeError(
            f"Feedback {f.shape} and passing {p.shape} do not fit a boundary with {graph.ports} ports"
        )

    vertices = range(graph.vertices)
    left = submatrix(graph.boundary, vertices, range(left_ports))
    right = submatrix(graph.boundary, vertices, range(left_ports, graph.ports))
    absorbed = DanglingGraph(
        SymClass(graph.adjacency.rep + left @ f @ left.T),
        hstack(left, right + left @ (f + f.T) @ p.T),
    )
    result = decomposition.with_graph(absorbed)
    before, after = rec_width(decomposition), rec_width(result)
    if after > before:
        raise WidthContractError(f"Absorbing feedback raised the width from {before} to {after}")
    return result


def _wiring(n1: Matrix, n2: Matrix, s: Matrix) -> BoundedGraph:
    """Vertexless ``n → r1 + r2`` passing through ``(N1; N2)`` with an ``S`` block of edges between the halves."""

    field = s.field
    r1, r2 = s.shape
    feedback = vstack(hstack(Matrix.zeros(r1, r1, field), s), Matrix.zeros(r2, r1 + r2, field))
    passing = vstack(n1, n2)
    return BoundedGraph(
        SymClass.empty(0, field),
        Matrix.zeros(0, passing.cols, field),
        Matrix.zeros(0, r1 + r2, field),
        passing,
        SymClass(feedback),
    )


def _translate(graph: DanglingGraph, shape: Shape, leaf_size: int, check: bool) -> Decomposition:
    """``graph`` lists its vertices in the leaf order of ``shape``, whose leaves are ``0..k-1``."""

    if isinstance(shape, int) or graph.vertices <= leaf_size:
        return Leaf(from_dangling(graph))

    split = len(shape_vertices(shape[0]))
    first, second = list(range(split)), list(range(split, graph.vertices))
    ports = range(graph.ports)
    cross = graph.adjacency.cross(first, second)
    factors = coupled_rank_factorization(
        submatrix(graph.boundary, first, ports), submatrix(graph.boundary, second, ports), cross
    )
    r1, r2 = factors.ranks
    left_shape, right_shape = shape[0], _shift(shape[1], -split)
    left = DanglingGraph(graph.adjacency.restrict(first), factors.l1)
    right = DanglingGraph(graph.adjacency.restrict(second), factors.l2)

    if check:
        rebase_boundary(RecRankDec(left, left_shape), hstack(factors.n1, factors.s @ factors.l2.T), full_rank=True)
        rebase_boundary(RecRankDec(right, right_shape), hstack(factors.n2, factors.s.T @ factors.l1.T), full_rank=True)

    return Compose(
        Leaf(_wiring(factors.n1, factors.n2, factors.s)),
        r1 + r2,
        Tensor(_translate(left, left_shape, leaf_size, check), _translate(right, right_shape, leaf_size, check)),
    )


@beartype
def rank_to_monoidal(decomposition: RecRankDec, leaf_size: int = 1, check: bool = True) -> Decomposition:
    """Monoidal decomposition of the state ``from_dangling(Γ)`` following the shape of a recursive rank decomposition.

    At a node over ``V1 ⊎ V2`` the coupled rank factorization of the child boundaries ``(A1 | C)`` and ``(A2 | Cᵀ)``
    yields a vertexless wiring ``n → r1 + r2`` followed by the tensor of both children, each over its full-rank
    factor ``Li`` as boundary. The cut ``r1 + r2`` is at most twice the width, and children over ``Li`` keep the
    width of children over ``(Ai | …)``.

    Args:
        decomposition (RecRankDec): Recursive rank decomposition over GF(2).
        leaf_size (int, optional): Subtrees with at most this many vertices become one leaf. Defaults to 1.
        check (bool, optional): Assert the width of every rebased child. Defaults to True.

    Raises:
        FieldModeError: The graph is not over GF(2).
        WidthContractError: The result is wider than ``max(leaf weight, 2·rec_width)``.

    Returns:
        Decomposition: A decomposition in the prop of graphs with boundaries.
    """

    graph = decomposition.graph
    if graph.field is not Field.GF2:
        raise FieldModeError(
            "Translating to a monoidal decomposition needs GF(2): rational rank factors can leave the naturals"
        )
    if decomposition.shape is None:
        return Leaf(from_dangling(graph))

    order = decomposition.leaf_order()
    shape = _relabel(decomposition.shape, inverse_permutation(order))
    result = _translate(graph.induced(order), shape, leaf_size, check)

    recursive_width = rec_width(decomposition)
    bound = max(min(leaf_size, graph.vertices), 2 * recursive_width)
    achieved = width(result, GrphProp(graph.field))
    if achieved > bound:
        raise WidthContractError(f"Monoidal decomposition has width {achieved} above {bound}")
    log.debug(f"Monoidal decomposition of width {achieved} from a recursive decomposition of width {recursive_width}")
    return result


def _build(d: Decomposition, prop: GrphProp, path: str) -> tuple[BoundedGraph, Shape]:
    match d:
        case Leaf(atom=atom):
            if not prop.is_atom(atom):
                raise CertificateError(f"Leaf at {path} is not a graph with boundaries over {prop.field.value}")
            return atom, _chain(atom.k)
        case Tensor(left=left, right=right):
            (g1, s1), (g2, s2) = _build(left, prop, f"{path}.L"), _build(right, prop, f"{path}.R")
            return tensor(g1, g2), _join(s1, _shift(s2, g1.k))
        case Compose(left=left, cut=cut, right=right):
            (g1, s1), (g2, s2) = _build(left, prop, f"{path}.L"), _build(right, prop, f"{path}.R")
            if g1.m != cut or g2.n != cut:
                raise CertificateError(f"Cut {cut} at {path} does not match arities {g1.m} and {g2.n}")
            return compose(g1, g2), _join(s1, _shift(s2, g1.k))
    raise CertificateError(f"Unknown decomposition node at {path}")


@beartype
def monoidal_to_rank(d: Decomposition, g: BoundedGraph) -> RecRankDec:
    """Recursive rank decomposition of ``to_dangling(g)`` following a monoidal decomposition ``d`` of ``g``.

    The vertices of every subtree of ``d`` form a subtree of the result; the vertices inside one leaf are
    chained in order. The width of the whole result is checked once against the monoidal width.

    Args:
        d (Decomposition): Decomposition in the prop of graphs with boundaries.
        g (BoundedGraph): The morphism ``d`` decomposes.

    Raises:
        CertificateError: ``d`` is malformed or does not evaluate to ``g``.
        WidthContractError: The result is wider than ``2·max(width(d), rank L, rank R)``.

    Returns:
        RecRankDec: Decomposition of ``([G], (L | R))``.
    """

    prop = GrphProp(g.field)
    value, shape = _build(d, prop, "root")
    perm = list(range(g.k)) if value == g else find_permutation(value, g, prop.equality_cap)
    if perm is None:
        raise CertificateError("Decomposition does not evaluate to the given graph with boundaries")

    result = RecRankDec(to_dangling(g), _relabel(shape, inverse_permutation(perm)))
    bound = 2 * max(width(d, prop), rank(g.left), rank(g.right))
    if rec_width(result) > bound:
        raise WidthContractError(f"Recursive decomposition has width {rec_width(result)} above {bound}")
    return result


class MwdBounds(NamedTuple):
    """``lower ≤ mwd ≤ upper`` for the state of a graph, with the certificate of the upper bound."""

    lower: Fraction
    upper: int
    certificate: Decomposition
    rank_width: int
    state: BoundedGraph


@beartype
def mwd_graph_bounds(graph: DanglingGraph, cap: int = DEFAULT_VERTEX_CAP, leaf_size: int = 1) -> MwdBounds:
    """Bounds on the monoidal width of a graph from its exact rank width: ``rwd/2 ≤ mwd ≤ 2·rwd``.

    Args:
        graph (DanglingGraph): Simple graph over GF(2); its boundary is ignored.
        cap (int, optional): Vertex cap of the exact solver. Defaults to 12.
        leaf_size (int, optional): Leaf granularity of the certificate. Defaults to 1.

    Raises:
        FieldModeError: The graph is not over GF(2).
        CapExceededError: The graph is larger than ``cap``.

    Returns:
        MwdBounds: Both bounds, the certificate and the rank width.
    """

    if graph.field is not Field.GF2:
        raise FieldModeError("Monoidal width bounds for graphs are computed over GF(2)")
    plain = graph.without_boundary()
    rank_width, decomposition = rrwd_exact(plain, cap)
    certificate = rank_to_monoidal(decomposition, leaf_size)
    upper = width(certificate, GrphProp(plain.field))
    log.info(f"Monoidal width of the graph lies in [{Fraction(rank_width, 2)}, {upper}]")
    return MwdBounds(Fraction(rank_width, 2), upper, certificate, rank_width, from_dangling(plain))


@beartype
def lower_bound_witness(d: Decomposition, g: BoundedGraph) -> tuple[RecRankDec, int]:
    """Recursive decomposition built from ``d`` with its width.

    For a state with empty boundary the width ``w`` bounds the rank width from above, so ``d`` itself is at least
    ``w / 2`` wide whenever ``rank L`` and ``rank R`` stay below ``width(d)``.
    """

    decomposition = monoidal_to_rank(d, g)
    return decomposition, rec_width(decomposition)
