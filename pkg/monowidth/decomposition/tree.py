from abc import ABC, abstractmethod
from dataclasses import dataclass

from beartype import beartype
from beartype.typing import Any, Iterator

from monowidth.utils.errors import IndexRangeError


class PropInterface(ABC):
    """What a prop has to provide so that decompositions over it can be evaluated, measured and stored.

    Objects are natural numbers; morphisms are whatever the client prop uses. ``compose(f, g)`` is the
    sequential composite ``f ; g`` (``f`` first), defined iff ``cod(f) = dom(g)``.
    """

    name: str = "prop"

    @abstractmethod
    def dom(self, f: Any) -> int: ...

    @abstractmethod
    def cod(self, f: Any) -> int: ...

    @abstractmethod
    def compose(self, f: Any, g: Any) -> Any: ...

    @abstractmethod
    def tensor(self, f: Any, g: Any) -> Any: ...

    @abstractmethod
    def equal(self, f: Any, g: Any) -> bool: ...

    @abstractmethod
    def identity(self, n: int) -> Any: ...

    @abstractmethod
    def is_atom(self, f: Any) -> bool: ...

    @abstractmethod
    def atom_weight(self, f: Any) -> int: ...

    def object_weight(self, n: int) -> int:
        """Weight of the object ``n``; additive with ``w(0) = 0``."""

        return n

    def atom_label(self, f: Any) -> str:
        return f"{self.dom(f)}->{self.cod(f)}"

    @abstractmethod
    def encode_atom(self, f: Any) -> Any:
        """JSON payload of an atom."""

    @abstractmethod
    def decode_atom(self, payload: Any) -> Any:
        """Inverse of :meth:`encode_atom`."""


@dataclass(frozen=True)
class Decomposition:
    """Node of a monoidal decomposition tree."""

    def children(self) -> tuple["Decomposition", ...]:
        return ()


@dataclass(frozen=True)
class Leaf(Decomposition):
    atom: Any


@dataclass(frozen=True)
class Tensor(Decomposition):
    left: Decomposition
    right: Decomposition

    def children(self) -> tuple[Decomposition, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Compose(Decomposition):
    """``left ;cut right``: the left child's codomain and the right child's domain are both ``cut``."""

    left: Decomposition
    cut: int
    right: Decomposition

    def children(self) -> tuple[Decomposition, ...]:
        return self.left, self.right


@beartype
def tensor_all(parts: list[Decomposition]) -> Decomposition:
    """Right-nested tensor ``d1 ⊗ (d2 ⊗ (...))`` of at least one decomposition."""

    if not parts:
        raise IndexRangeError("Cannot tensor an empty list of decompositions")
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = Tensor(part, result)
    return result


@beartype
def compose_all(parts: list[Decomposition], cuts: list[int]) -> Decomposition:
    """Left-nested composite ``((d1 ;c1 d2) ;c2 d3) ...``; ``cuts[i]`` sits between ``parts[i]`` and ``parts[i+1]``."""

    if not parts or len(cuts) != len(parts) - 1:
        raise IndexRangeError(f"Need one cut between each of {len(parts)} parts, got {len(cuts)}")
    result = parts[0]
    for cut, part in zip(cuts, parts[1:]):
        result = Compose(result, cut, part)
    return result


@beartype
def arity(d: Decomposition, prop: PropInterface) -> tuple[int, int]:
    """Domain and codomain of the morphism ``d`` stands for, read without evaluating compositions."""

    match d:
        case Leaf(atom=atom):
            return prop.dom(atom), prop.cod(atom)
        case Tensor(left=left, right=right):
            (n1, m1), (n2, m2) = arity(left, prop), arity(right, prop)
            return n1 + n2, m1 + m2
        case Compose(left=left, right=right):
            return arity(left, prop)[0], arity(right, prop)[1]
    raise TypeError(f"Unknown decomposition node {type(d).__name__}")


@beartype
def leaves(d: Decomposition) -> Iterator[tuple[str, Any]]:
    """Atoms of ``d`` in left-to-right order, with their node paths."""

    stack = [("root", d)]
    while stack:
        path, node = stack.pop()
        if isinstance(node, Leaf):
            yield path, node.atom
            continue
        left, right = node.children()
        stack.append((f"{path}.R", right))
        stack.append((f"{path}.L", left))


@beartype
def node_count(d: Decomposition) -> int:
    return 1 + sum(node_count(child) for child in d.children())


def _steps(path: str) -> list[str]:
    parts = path.split(".")
    if parts[0] != "root" or any(step not in ("L", "R") for step in parts[1:]):
        raise IndexRangeError(f"Malformed node path {path!r}, expected e.g. 'root.L.R'")
    return parts[1:]


@beartype
def node_at(d: Decomposition, path: str) -> Decomposition:
    """Subtree at ``path`` (``"root"``, ``"root.L"``, ``"root.L.R"``, ...)."""

    node = d
    for step in _steps(path):
        if isinstance(node, Leaf):
            raise IndexRangeError(f"Path {path!r} descends below a leaf")
        node = node.children()[0 if step == "L" else 1]
    return node


@beartype
def replace_at(d: Decomposition, path: str, new: Decomposition) -> Decomposition:
    """Copy of ``d`` with the subtree at ``path`` replaced by ``new``."""

    steps = _steps(path)
    if not steps:
        return new
    if isinstance(d, Leaf):
        raise IndexRangeError(f"Path {path!r} descends below a leaf")
    rest = ".".join(["root", *steps[1:]])
    if isinstance(d, Tensor):
        if steps[0] == "L":
            return Tensor(replace_at(d.left, rest, new), d.right)
        return Tensor(d.left, replace_at(d.right, rest, new))
    if steps[0] == "L":
        return Compose(replace_at(d.left, rest, new), d.cut, d.right)
    return Compose(d.left, d.cut, replace_at(d.right, rest, new))
