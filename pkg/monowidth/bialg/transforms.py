from beartype import beartype
from beartype.typing import Sequence
from loguru import logger as log

from monowidth.bialg.constructions import identity_decomposition, transpose_decomposition, zero_decomposition
from monowidth.bialg.factorize import rank_decomposition_of_matrix
from monowidth.bialg.prop import BialgProp, generator, generator_name, is_flagged_scalar
from monowidth.decomposition.tree import Compose, Decomposition, Leaf, Tensor, arity
from monowidth.decomposition.width import evaluate
from monowidth.linalg.matrix import Matrix, direct_sum
from monowidth.utils.errors import CertificateError, IndexRangeError


def _discarded_leaf(atom: Matrix, keep: tuple[bool, ...]) -> Decomposition:
    """A generator followed by discarding the outputs marked False, as a decomposition of no greater width."""

    field = atom.field
    discard, identity = Leaf(generator("discard", field)), Leaf(generator("id", field))
    name = generator_name(atom)
    if name == "copy":
        return identity if any(keep) else discard
    if name == "add":
        return Tensor(discard, discard)
    if name == "zero":
        return identity_decomposition(0, field)
    if name == "swap":
        # output 0 carries input 1 and output 1 carries input 0
        return Tensor(identity if keep[1] else discard, identity if keep[0] else discard)
    if name == "id" or is_flagged_scalar(atom):
        return discard
    raise CertificateError(f"Leaf {atom!r} is not a bialg atom")


def _discard_outputs(d: Decomposition, keep: tuple[bool, ...], prop: BialgProp) -> Decomposition:
    if all(keep):
        return d
    match d:
        case Leaf(atom=atom):
            return _discarded_leaf(atom, keep)
        case Tensor(left=left, right=right):
            split = arity(left, prop)[1]
            return Tensor(_discard_outputs(left, keep[:split], prop), _discard_outputs(right, keep[split:], prop))
        case Compose(left=left, cut=cut, right=right):
            return Compose(left, cut, _discard_outputs(right, keep, prop))
    raise TypeError(f"Unknown decomposition node {type(d).__name__}")


@beartype
def discard_outputs(d: Decomposition, keep: Sequence[bool], prop: BialgProp) -> Decomposition:
    """Decomposition of ``f`` followed by discarding every output whose ``keep`` flag is False.

    Only the last factor of each composition is rewritten, and each generator is replaced by a small
    decomposition of no greater width, so the width never grows.

    Args:
        d (Decomposition): Decomposition of ``f: n → m``.
        keep (Sequence[bool]): One flag per output of ``f``.
        prop (BialgProp): The matrix prop.

    Returns:
        Decomposition: Decomposition of ``f`` with the dropped outputs removed.
    """

    outputs = arity(d, prop)[1]
    if len(keep) != outputs:
        raise IndexRangeError(f"Need one keep flag per output, got {len(keep)} for {outputs} outputs")
    return _discard_outputs(d, tuple(keep), prop)


@beartype
def zero_inputs(d: Decomposition, keep: Sequence[bool], prop: BialgProp) -> Decomposition:
    """Decomposition of ``f`` with every input whose ``keep`` flag is False fed by ``zero``."""

    return transpose_decomposition(discard_outputs(transpose_decomposition(d), keep, prop))


@beartype
def discard_transform(d: Decomposition, k: int, prop: BialgProp) -> Decomposition:
    """Decomposition of ``f ; (id_{m-k} ⊗ discard_k)`` with width at most that of ``d``."""

    outputs = arity(d, prop)[1]
    if not 0 <= k <= outputs:
        raise IndexRangeError(f"Cannot discard {k} of {outputs} outputs")
    return discard_outputs(d, [True] * (outputs - k) + [False] * k, prop)


@beartype
def zero_transform(d: Decomposition, k: int, prop: BialgProp) -> Decomposition:
    """Decomposition of ``(id_{n-k} ⊗ zero_k) ; f`` with width at most that of ``d``."""

    inputs = arity(d, prop)[0]
    if not 0 <= k <= inputs:
        raise IndexRangeError(f"Cannot feed zeros into {k} of {inputs} inputs")
    return zero_inputs(d, [True] * (inputs - k) + [False] * k, prop)


def _restrict(d: Decomposition, f: Matrix, first: bool, prop: BialgProp) -> Decomposition:
    """Cut the block ``f`` of a direct sum out of ``d`` by feeding zeros and discarding on the other block."""

    n, m = arity(d, prop)
    if first:
        inputs = [True] * f.cols + [False] * (n - f.cols)
        outputs = [True] * f.rows + [False] * (m - f.rows)
    else:
        inputs = [False] * (n - f.cols) + [True] * f.cols
        outputs = [False] * (m - f.rows) + [True] * f.rows
    return discard_outputs(zero_inputs(d, inputs, prop), outputs, prop)


@beartype
def tensor_root_transform(d: Decomposition, f1: Matrix, f2: Matrix, prop: BialgProp) -> Decomposition:
    """Turn a composition-rooted decomposition of ``f1 ⊗ f2`` into a tensor-rooted one of no greater width.

    With both ranks positive the root cut is at least ``rank(f1) + rank(f2)``, so the rank decompositions of
    the two factors already fit. A rank-zero factor gets ``discards ;0 zeros`` and the other factor is cut out of
    ``d`` with the discard and zero transforms.

    Args:
        d (Decomposition): Decomposition of ``f1 ⊗ f2``.
        f1 (Matrix): First block.
        f2 (Matrix): Second block.
        prop (BialgProp): The matrix prop.

    Raises:
        CertificateError: ``d`` does not evaluate to ``f1 ⊗ f2``.

    Returns:
        Decomposition: A ``Tensor`` node.
    """

    if evaluate(d, prop) != direct_sum(f1, f2):
        raise CertificateError("Decomposition does not evaluate to the direct sum of the given blocks")
    if not isinstance(d, Compose):
        log.debug("Decomposition root is not a composition, nothing to transform")
        return d

    r1, r2 = f1.rank(), f2.rank()
    if r1 > 0 and r2 > 0:
        return Tensor(rank_decomposition_of_matrix(f1), rank_decomposition_of_matrix(f2))
    first = zero_decomposition(f1.rows, f1.cols, f1.field) if r1 == 0 else _restrict(d, f1, True, prop)
    second = zero_decomposition(f2.rows, f2.cols, f2.field) if r2 == 0 else _restrict(d, f2, False, prop)
    return Tensor(first, second)
