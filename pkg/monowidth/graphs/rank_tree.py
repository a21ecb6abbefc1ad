import networkx as nx
from beartype import beartype
from beartype.typing import Hashable, Sequence
from loguru import logger as log

from monowidth.graphs.cuts import cut_matrix
from monowidth.graphs.dangling import DanglingGraph
from monowidth.linalg.elimination import rank
from monowidth.utils.errors import CertificateError


@beartype
class RankDecTree:
    """Rank decomposition ``(Y, r)``: an unrooted tree with node degrees 1 to 3 and a bijection from its leaves
    to the vertices of a graph.

    A one-vertex graph uses the one-node tree, whose single node counts as its leaf; the empty graph uses the
    empty tree.

    Args:
        tree (nx.Graph): The tree ``Y``.
        labels (dict[Hashable, int]): Leaf ``→`` graph vertex.
    """

    def __init__(self, tree: nx.Graph, labels: dict[Hashable, int]) -> None:
        self.tree = tree
        self.labels = dict(labels)

    @classmethod
    def caterpillar(cls, order: Sequence[int]) -> "RankDecTree":
        """Spine of inner nodes with one leaf each, two at either end, leaves in the given vertex order."""

        tree = nx.Graph()
        labels = {f"v{v}": v for v in order}
        tree.add_nodes_from(labels)
        if len(order) == 2:
            tree.add_edge(f"v{order[0]}", f"v{order[1]}")
        elif len(order) > 2:
            spine = [f"s{i}" for i in range(len(order) - 2)]
            nx.add_path(tree, spine)
            tree.add_edge(spine[0], f"v{order[0]}")
            for node, v in zip(spine, order[1:-1]):
                tree.add_edge(node, f"v{v}")
            tree.add_edge(spine[-1], f"v{order[-1]}")
        return cls(tree, labels)

    def leaves(self) -> list[Hashable]:
        if self.tree.number_of_nodes() == 1:
            return list(self.tree.nodes)
        return [node for node, degree in self.tree.degree if degree == 1]

    def validate(self, graph: DanglingGraph) -> None:
        """Check the tree shape and the leaf bijection.

        Raises:
            CertificateError: The tree is not a rank decomposition of ``graph``.
        """

        nodes = self.tree.number_of_nodes()
        if nodes == 0:
            if graph.vertices or self.labels:
                raise CertificateError("Empty tree for a graph with vertices")
            return
        if not nx.is_tree(self.tree):
            raise CertificateError("Rank decomposition is not a tree")
        if nodes > 1 and any(not 1 <= degree <= 3 for _, degree in self.tree.degree):
            raise CertificateError("Rank decomposition tree has a node of degree outside 1..3")
        leaves = set(self.leaves())
        if set(self.labels) != leaves:
            raise CertificateError("Leaf labels do not match the leaves of the tree")
        if sorted(self.labels.values()) != list(range(graph.vertices)):
            raise CertificateError(f"Leaf labels are not a bijection onto the {graph.vertices} vertices")

    def edge_cuts(self) -> dict[tuple[Hashable, Hashable], list[int]]:
        """For every tree edge ``(a, b)`` the graph vertices on the ``a`` side, sorted."""

        cuts = {}
        for a, b in self.tree.edges:
            pruned = self.tree.copy()
            pruned.remove_edge(a, b)
            side = nx.node_connected_component(pruned, a)
            cuts[(a, b)] = sorted(self.labels[node] for node in side if node in self.labels)
        return cuts

    def edge_ranks(self, graph: DanglingGraph) -> dict[tuple[Hashable, Hashable], int]:
        return {edge: rank(cut_matrix(graph, part)) for edge, part in self.edge_cuts().items()}

    def __repr__(self) -> str:
        return f"RankDecTree(nodes={self.tree.number_of_nodes()}, leaves={len(self.labels)})"


@beartype
def rank_dec_width(graph: DanglingGraph, tree: RankDecTree) -> int:
    """Width of a rank decomposition: the largest cut rank over the tree edges, 0 without edges.

    Args:
        graph (DanglingGraph): Graph; its boundary is ignored.
        tree (RankDecTree): Rank decomposition of the graph.

    Returns:
        int: ``max_b rank(X_b)``.
    """

    tree.validate(graph)
    ranks = tree.edge_ranks(graph)
    log.debug(f"Cut ranks over {len(ranks)} tree edges: {sorted(ranks.values(), reverse=True)[:5]}")
    return max(ranks.values(), default=0)
