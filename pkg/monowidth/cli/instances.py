"""Seeded random instances: matrices, graphs, graphs with boundaries and build-tree certificates."""

import numpy as np
from beartype import beartype
from loguru import logger as log

from monowidth.decomposition.tree import Compose, Decomposition, Leaf, Tensor, arity
from monowidth.decomposition.width import evaluate
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.families import random_boundary, random_graph
from monowidth.grph.bounded import BoundedGraph
from monowidth.grph.prop import GRAPH_GENERATOR_NAMES, GrphProp, graph_generator
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass


@beartype
def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@beartype
def random_matrix(rng: np.random.Generator, rows: int, cols: int, field: Field, max_entry: int = 1) -> Matrix:
    """Entries drawn uniformly from ``0..max_entry``; over GF(2) from ``{0, 1}``."""

    high = 1 if field is Field.GF2 else max_entry
    return Matrix.from_rows(rng.integers(0, high + 1, size=(rows, cols)).tolist(), field, cols=cols)


@beartype
def random_dangling_graph(
    rng: np.random.Generator,
    vertices: int,
    ports: int,
    field: Field = Field.GF2,
    edge_probability: float = 0.5,
    boundary_probability: float = 0.3,
) -> DanglingGraph:
    graph = random_graph(vertices, rng, edge_probability, field)
    return random_boundary(graph, ports, rng, boundary_probability)


def _random_bits(rng: np.random.Generator, rows: int, cols: int, probability: float, field: Field) -> Matrix:
    bits = (rng.random((rows, cols)) < probability).astype(np.int64)
    return Matrix.from_rows(bits.tolist(), field, cols=cols)


def _random_upper(rng: np.random.Generator, size: int, probability: float, field: Field) -> SymClass:
    bits = np.triu(rng.random((size, size)) < probability, k=1).astype(np.int64)
    return SymClass(Matrix.from_rows(bits.tolist(), field, cols=size))


@beartype
def random_bounded_graph(
    rng: np.random.Generator, n: int, m: int, k: int, field: Field = Field.GF2, probability: float = 0.4
) -> BoundedGraph:
    """A simple graph with boundaries ``n → m`` on ``k`` vertices, every 0/1 entry drawn independently."""

    return BoundedGraph(
        _random_upper(rng, k, probability, field),
        _random_bits(rng, k, n, probability, field),
        _random_bits(rng, k, m, probability, field),
        _random_bits(rng, m, n, probability, field),
        _random_upper(rng, m, probability, field),
    )


def _random_atom(rng: np.random.Generator, field: Field, dom: int | None = None) -> BoundedGraph:
    if dom is None and rng.random() < 0.5:
        return graph_generator(str(rng.choice(GRAPH_GENERATOR_NAMES)), field)
    n = int(rng.integers(0, 3)) if dom is None else dom
    return random_bounded_graph(rng, n, int(rng.integers(0, 3)), int(rng.integers(0, 3)), field)


@beartype
def random_build(rng: np.random.Generator, pieces: int, field: Field = Field.GF2) -> tuple[Decomposition, BoundedGraph]:
    """A random decomposition in the prop of graphs with boundaries, together with the morphism it builds.

    Each step either tensors a random atom onto the tree, on either side, or composes a random atom whose left
    boundary matches the current right boundary.

    Args:
        rng (np.random.Generator): Source of randomness.
        pieces (int): Number of atoms in the tree, at least one.
        field (Field, optional): Scalar field. Defaults to Field.GF2.

    Returns:
        tuple[Decomposition, BoundedGraph]: The certificate and its value.
    """

    prop = GrphProp(field)
    tree: Decomposition = Leaf(_random_atom(rng, field))
    for _ in range(max(pieces, 1) - 1):
        if rng.random() < 0.5:
            atom = Leaf(_random_atom(rng, field))
            tree = Tensor(tree, atom) if rng.random() < 0.5 else Tensor(atom, tree)
        else:
            cut = arity(tree, prop)[1]
            tree = Compose(tree, cut, Leaf(_random_atom(rng, field, dom=cut)))
    value = evaluate(tree, prop)
    log.debug(f"Random build tree of {pieces} atoms evaluates to {value!r}")
    return tree, value
