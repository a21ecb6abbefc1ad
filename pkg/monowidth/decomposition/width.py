from beartype import beartype
from beartype.typing import Any
from loguru import logger as log

from monowidth.decomposition.tree import Compose, Decomposition, Leaf, PropInterface, Tensor
from monowidth.utils.errors import ArityError, MonowidthError


@beartype
def width(d: Decomposition, prop: PropInterface) -> int:
    """Width of a decomposition: atoms cost their weight, cuts the weight of their object.

    Args:
        d (Decomposition): Well-formed decomposition.
        prop (PropInterface): Prop the atoms live in.

    Returns:
        int: ``max`` over atom weights and cut weights in the tree.
    """

    match d:
        case Leaf(atom=atom):
            return prop.atom_weight(atom)
        case Tensor(left=left, right=right):
            return max(width(left, prop), width(right, prop))
        case Compose(left=left, cut=cut, right=right):
            return max(width(left, prop), prop.object_weight(cut), width(right, prop))
    raise TypeError(f"Unknown decomposition node {type(d).__name__}")


@beartype
def labelled_nodes(d: Decomposition, prop: PropInterface) -> list[tuple[str, int]]:
    """The tree flattened to node labels with their weights: atoms, ``⊗`` (weight 0) and ``;k`` cuts."""

    labels = []
    stack = [d]
    while stack:
        node = stack.pop()
        match node:
            case Leaf(atom=atom):
                labels.append((prop.atom_label(atom), prop.atom_weight(atom)))
            case Tensor():
                labels.append(("⊗", 0))
            case Compose(cut=cut):
                labels.append((f";{cut}", prop.object_weight(cut)))
        stack.extend(reversed(node.children()))
    return labels


@beartype
def max_node_width(d: Decomposition, prop: PropInterface) -> int:
    """Width as the largest weight among the labelled nodes; agrees with :func:`width`."""

    return max(weight for _, weight in labelled_nodes(d, prop))


def _evaluate(d: Decomposition, prop: PropInterface, path: str) -> Any:
    match d:
        case Leaf(atom=atom):
            if not prop.is_atom(atom):
                raise ArityError(f"Leaf holds a morphism that is not an atom of {prop.name}", path)
            return atom
        case Tensor(left=left, right=right):
            return prop.tensor(_evaluate(left, prop, f"{path}.L"), _evaluate(right, prop, f"{path}.R"))
        case Compose(left=left, cut=cut, right=right):
            f = _evaluate(left, prop, f"{path}.L")
            g = _evaluate(right, prop, f"{path}.R")
            if prop.cod(f) != cut or prop.dom(g) != cut:
                raise ArityError(
                    f"Cut {cut} does not match codomain {prop.cod(f)} of the left part "
                    f"and domain {prop.dom(g)} of the right part",
                    path,
                )
            return prop.compose(f, g)
    raise ArityError(f"Unknown decomposition node {type(d).__name__}", path)


@beartype
def evaluate(d: Decomposition, prop: PropInterface) -> Any:
    """Fold compositions and tensors over the tree.

    Args:
        d (Decomposition): Decomposition to evaluate.
        prop (PropInterface): Prop of the atoms.

    Raises:
        ArityError: A cut disagrees with the arities around it, or a leaf is no atom; carries the node path.

    Returns:
        Any: The morphism ``d`` decomposes.
    """

    return _evaluate(d, prop, "root")


@beartype
def validate(d: Decomposition, f: Any, prop: PropInterface) -> bool:
    """Whether ``d`` is a well-formed decomposition of ``f``; failures are logged, not raised."""

    try:
        value = evaluate(d, prop)
    except MonowidthError as e:
        log.warning(f"Decomposition does not evaluate: {e}")
        return False
    if prop.dom(value) != prop.dom(f) or prop.cod(value) != prop.cod(f):
        log.warning(
            f"Decomposition evaluates to a {prop.dom(value)}->{prop.cod(value)} morphism, "
            f"expected {prop.dom(f)}->{prop.cod(f)}"
        )
        return False
    if not prop.equal(value, f):
        log.warning("Decomposition evaluates to a different morphism")
        return False
    return True
