"""Named graph families and random instances."""

import itertools

import networkx as nx
import numpy as np
from beartype import beartype
from beartype.typing import Iterator

from monowidth.graphs.dangling import DanglingGraph
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import IndexRangeError


@beartype
def complete_graph(n: int, field: Field = Field.GF2) -> DanglingGraph:
    return DanglingGraph.from_networkx(nx.complete_graph(n), field)


@beartype
def cycle_graph(n: int, field: Field = Field.GF2) -> DanglingGraph:
    if n < 3:
        raise IndexRangeError(f"A cycle needs at least 3 vertices, got {n}")
    return DanglingGraph.from_networkx(nx.cycle_graph(n), field)


@beartype
def path_graph(n: int, field: Field = Field.GF2) -> DanglingGraph:
    return DanglingGraph.from_networkx(nx.path_graph(n), field)


@beartype
def edgeless_graph(n: int, field: Field = Field.GF2) -> DanglingGraph:
    return DanglingGraph.from_networkx(nx.empty_graph(n), field)


@beartype
def random_graph(
    n: int, rng: np.random.Generator, edge_probability: float = 0.5, field: Field = Field.GF2, max_multiplicity: int = 1
) -> DanglingGraph:
    """Erdős–Rényi graph; in rational mode each edge gets a multiplicity in ``1..max_multiplicity``."""

    graph = nx.gnp_random_graph(n, edge_probability, seed=int(rng.integers(2**31)))
    if max_multiplicity > 1:
        for u, v in graph.edges:
            graph.edges[u, v]["multiplicity"] = int(rng.integers(1, max_multiplicity + 1))
    return DanglingGraph.from_networkx(graph, field)


@beartype
def random_boundary(
    graph: DanglingGraph, ports: int, rng: np.random.Generator, probability: float = 0.3
) -> DanglingGraph:
    """The same graph with a random 0/1 boundary over ``ports`` ports."""

    bits = (rng.random((graph.vertices, ports)) < probability).astype(np.int64)
    return graph.with_boundary(Matrix.from_rows(bits.tolist(), graph.field, cols=ports))


@beartype
def all_simple_graphs(n: int) -> Iterator[DanglingGraph]:
    """Every labelled simple graph on ``n`` vertices, ``2^(n choose 2)`` of them."""

    pairs = list(itertools.combinations(range(n), 2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield DanglingGraph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


FAMILIES = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "edgeless": edgeless_graph,
}
