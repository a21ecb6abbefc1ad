"""Exact rank width and recursive rank width of desk-scale graphs."""

import networkx as nx
from beartype import beartype
from beartype.typing import Callable
from loguru import logger as log

from monowidth.graphs.cuts import CutRanks
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.rank_tree import RankDecTree, rank_dec_width
from monowidth.graphs.recursive import RecRankDec, Shape, to_rank_dec
from monowidth.linalg.elimination import rank
from monowidth.utils.errors import CapExceededError

DEFAULT_VERTEX_CAP = 12
ORACLE_VERTEX_CAP = 7


def _check_cap(graph: DanglingGraph, cap: int, what: str) -> None:
    if graph.vertices > cap:
        log.warning(f"Refusing {what} on {graph.vertices} vertices, cap is {cap}")
        raise CapExceededError(f"{what} is capped at {cap} vertices, the graph has {graph.vertices}")


@beartype
class SubsetDP:
    """Rooted binary partition search over vertex subsets.

    ``best(S) = max(cost(S), min over S = S1 ⊎ S2 of max(best(S1), best(S2)))``, singletons costing only
    themselves. Every split keeps the lowest vertex of ``S`` in ``S1`` so each bipartition is visited once,
    and subsets are processed layer by layer in order of size.

    Args:
        size (int): Vertex count.
        cost (Callable[[int], int]): Cost of a subset given as a bitmask.
    """

    def __init__(self, size: int, cost: Callable[[int], int]) -> None:
        self.size = size
        self.full = (1 << size) - 1
        self.best: dict[int, int] = {}
        self.choice: dict[int, int] = {}
        self.costs: dict[int, int] = {}
        self._run(cost)

    def _run(self, cost: Callable[[int], int]) -> None:
        for layer in range(1, self.size + 1):
            masks = [mask for mask in range(1, self.full + 1) if mask.bit_count() == layer]
            for mask in masks:
                own = self.costs[mask] = cost(mask)
                if layer == 1:
                    self.best[mask] = own
                    continue
                low = mask & -mask
                rest = mask ^ low
                value, choice = None, None
                sub = rest
                while True:
                    sub = (sub - 1) & rest
                    part = sub | low
                    candidate = max(self.best[part], self.best[mask ^ part])
                    if value is None or candidate < value:
                        value, choice = candidate, part
                    if sub == 0:
                        break
                self.best[mask] = max(own, value)
                self.choice[mask] = choice
            log.debug(f"Subset layer {layer}: {len(masks)} subsets")

    @property
    def value(self) -> int:
        return self.best.get(self.full, 0)

    def shape(self, mask: int | None = None) -> Shape:
        """Rooted binary shape realising ``best`` at ``mask`` (the full set by default)."""

        mask = self.full if mask is None else mask
        if mask == 0:
            return None
        if mask.bit_count() == 1:
            return mask.bit_length() - 1
        part = self.choice[mask]
        return self.shape(part), self.shape(mask ^ part)

    def table(self) -> dict[str, int]:
        """Subset costs keyed by the sorted vertex list, e.g. ``"0,2,3"``."""

        def members(mask: int) -> str:
            return ",".join(str(v) for v in range(self.size) if mask >> v & 1)

        return {members(mask): cost for mask, cost in sorted(self.costs.items())}


@beartype
def rwd_exact(graph: DanglingGraph, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, RankDecTree]:
    """Exact rank width with an optimal rank decomposition.

    With an empty boundary the rooted search is exact for rank width, so the cut rank of every proper subset is
    the cost and the full set costs nothing. The optimal shape is unrooted with :func:`to_rank_dec`.

    Args:
        graph (DanglingGraph): Graph; its boundary is ignored.
        cap (int, optional): Largest vertex count accepted. Defaults to 12.

    Raises:
        CapExceededError: The graph is larger than ``cap``.

    Returns:
        tuple[int, RankDecTree]: The rank width and a witness tree.
    """

    _check_cap(graph, cap, "Exact rank width")
    plain = graph.without_boundary()
    if plain.vertices == 0:
        return 0, RankDecTree(nx.Graph(), {})

    cut_ranks = CutRanks(plain, use_boundary=False)
    full = (1 << plain.vertices) - 1
    dp = SubsetDP(plain.vertices, lambda mask: 0 if mask == full else cut_ranks(mask))
    tree = to_rank_dec(RecRankDec(plain, dp.shape()))
    log.info(f"Rank width {dp.value} on {plain.vertices} vertices ({len(cut_ranks.cache)} cut ranks)")
    return dp.value, tree


@beartype
def rrwd_exact(graph: DanglingGraph, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, RecRankDec]:
    """Exact recursive rank width with an optimal recursive rank decomposition.

    The derived boundary of a subtree on ``S`` has the rank of ``(B[S] | X_S)``, which is the subset cost; at the
    full set it reduces to ``rank(B)``.

    Args:
        graph (DanglingGraph): Graph with dangling edges.
        cap (int, optional): Largest vertex count accepted. Defaults to 12.

    Raises:
        CapExceededError: The graph is larger than ``cap``.

    Returns:
        tuple[int, RecRankDec]: The recursive rank width and a witness.
    """

    _check_cap(graph, cap, "Exact recursive rank width")
    if graph.vertices == 0:
        return rank(graph.boundary), RecRankDec(graph, None)

    dp = SubsetDP(graph.vertices, CutRanks(graph, use_boundary=True))
    log.info(f"Recursive rank width {dp.value} on {graph.vertices} vertices and {graph.ports} ports")
    return dp.value, RecRankDec(graph, dp.shape())


@beartype
def cut_rank_table(graph: DanglingGraph, use_boundary: bool = False, cap: int = DEFAULT_VERTEX_CAP) -> dict[str, int]:
    """Cut rank of every nonempty vertex subset, as used by the exact solvers."""

    _check_cap(graph, cap, "Cut rank table")
    cut_ranks = CutRanks(graph, use_boundary=use_boundary)
    return {
        ",".join(str(v) for v in cut_ranks.vertices_of(mask)): cut_ranks(mask) for mask in range(1, 1 << graph.vertices)
    }


def _insert_leaf(tree: nx.Graph, edge: tuple[str, str], vertex: int) -> nx.Graph:
    """Subdivide ``edge`` with a new inner node and hang the leaf of ``vertex`` from it."""

    u, w = edge
    inner = f"t{vertex}"
    grown = tree.copy()
    grown.remove_edge(u, w)
    grown.add_edges_from([(u, inner), (inner, w), (inner, f"v{vertex}")])
    return grown


@beartype
def rwd_enumerate_oracle(graph: DanglingGraph, cap: int = ORACLE_VERTEX_CAP) -> int:
    """Rank width by enumerating every subcubic tree with labelled leaves.

    Trees grow by inserting the leaf of the next vertex into every edge of the previous tree. The width of a
    partial tree over the graph induced by the inserted vertices bounds the width of all its completions from
    below, so branches that cannot beat the best complete tree are cut.

    Args:
        graph (DanglingGraph): Graph; its boundary is ignored.
        cap (int, optional): Largest vertex count accepted. Defaults to 7.

    Raises:
        CapExceededError: The graph is larger than ``cap``.

    Returns:
        int: The rank width.
    """

    _check_cap(graph, cap, "Enumeration oracle")
    n = graph.vertices
    if n <= 1:
        return 0

    plain = graph.without_boundary()
    best = None
    visited = 0

    def grow(tree: nx.Graph, inserted: int) -> None:
        nonlocal best, visited
        visited += 1
        labels = {f"v{v}": v for v in range(inserted)}
        partial = rank_dec_width(plain.induced(range(inserted)), RankDecTree(tree, labels))
        if best is not None and partial >= best:
            return
        if inserted == n:
            best = partial
            return
        for edge in list(tree.edges):
            grow(_insert_leaf(tree, edge, inserted), inserted + 1)

    start = nx.Graph()
    start.add_edge("v0", "v1")
    grow(start, 2)
    log.debug(f"Enumeration oracle visited {visited} partial trees")
    return best
