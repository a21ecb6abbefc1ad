"""Explicit decompositions in the prop of matrices, each with a proven width bound."""

from fractions import Fraction

from beartype import beartype
from beartype.typing import Any
from loguru import logger as log

from monowidth.bialg.prop import generator, generator_name, is_flagged_scalar
from monowidth.decomposition.tree import Compose, Decomposition, Leaf, Tensor, compose_all, leaves, tensor_all
from monowidth.linalg.matrix import Matrix, submatrix, transpose
from monowidth.linalg.scalars import Field, is_natural
from monowidth.utils.errors import FieldModeError, IndexRangeError

_TRANSPOSED_GENERATOR = {"copy": "add", "add": "copy", "discard": "zero", "zero": "discard", "swap": "swap", "id": "id"}


def _leaf(name: str, field: Field) -> Leaf:
    return Leaf(generator(name, field))


def _ids(n: int, field: Field) -> Decomposition | None:
    return tensor_all([_leaf("id", field)] * n) if n > 0 else None


def _tensor(*parts: Decomposition | None) -> Decomposition | None:
    present = [part for part in parts if part is not None]
    return tensor_all(present) if present else None


@beartype
def identity_decomposition(n: int, field: Field) -> Decomposition:
    """``id_n`` as a tensor of identity leaves (width 1); ``id_0`` is ``zero ;1 discard``."""

    if n == 0:
        return Compose(_leaf("zero", field), 1, _leaf("discard", field))
    return _ids(n, field)


@beartype
def zero_decomposition(rows: int, cols: int, field: Field) -> Decomposition:
    """The zero matrix ``cols → rows`` as discards ``;0`` zeros, width 1."""

    if rows == 0 and cols == 0:
        return identity_decomposition(0, field)
    discards = _tensor(*[_leaf("discard", field)] * cols)
    zeros = _tensor(*[_leaf("zero", field)] * rows)
    if discards is None:
        return zeros
    if zeros is None:
        return discards
    return Compose(discards, 0, zeros)


def _copies(k: int, field: Field) -> Decomposition:
    """``1 → k`` all-ones column, by splitting the first wire again and again."""

    result = _leaf("copy", field)
    for j in range(2, k):
        result = Compose(result, j, _tensor(_leaf("copy", field), _ids(j - 1, field)))
    return result


@beartype
def scalar_decomposition(k: int | Fraction, field: Field, naive: bool = False) -> Decomposition:
    """Decomposition of the ``1×1`` matrix ``[k]``.

    ``0`` is ``discard ;0 zero`` and ``1`` the identity leaf. Larger naturals chain copy/add diamonds,
    ``k + 1 = copy ;2 (k ⊗ id) ;2 add``, so that no cut exceeds 2. With ``naive`` the scalar is split into ``k``
    parallel wires and summed again, giving a root cut of ``k``.

    Args:
        k (int | Fraction): The scalar; over GF(2) only 0 and 1.
        field (Field): Scalar field.
        naive (bool, optional): Build the wide copy-then-add decomposition instead. Defaults to False.

    Returns:
        Decomposition: Width at most 2, or ``k`` for the naive variant.
    """

    if field is Field.GF2 and k not in (0, 1):
        raise FieldModeError(f"Scalar {k} is not an element of GF(2)")
    if not is_natural(k):
        if field is not Field.RAT:
            raise FieldModeError(f"Scalar {k} lies outside the natural numbers")
        log.warning(f"Scalar {k} lies outside the natural numbers, emitting a flagged leaf")
        return Leaf(Matrix.from_rows([[k]], field))

    k = int(k)
    if k == 0:
        return Compose(_leaf("discard", field), 0, _leaf("zero", field))
    if k == 1:
        return _leaf("id", field)
    if naive:
        return Compose(_copies(k, field), k, transpose_decomposition(_copies(k, field)))

    result = Compose(_leaf("copy", field), 2, _leaf("add", field))
    for _ in range(2, k):
        result = compose_all(
            [_leaf("copy", field), Tensor(result, _leaf("id", field)), _leaf("add", field)],
            [2, 2],
        )
    return result


@beartype
def swap_decomposition(n: int, m: int, field: Field) -> Decomposition:
    """``swap_{n,m}: n+m → m+n`` moving the first ``n`` wires past the last ``m``; width ``n+m``."""

    if n + m == 0:
        return identity_decomposition(0, field)
    if n == 0 or m == 0:
        return _ids(n + m, field)
    if n == 1:
        if m == 1:
            return _leaf("swap", field)
        return Compose(
            _tensor(_leaf("swap", field), _ids(m - 1, field)),
            m + 1,
            _tensor(_leaf("id", field), swap_decomposition(1, m - 1, field)),
        )
    return Compose(
        _tensor(_ids(n - 1, field), swap_decomposition(1, m, field)),
        n + m,
        _tensor(swap_decomposition(n - 1, m, field), _leaf("id", field)),
    )


def _delta(p: int, field: Field) -> Decomposition:
    """``(x, y_1..y_p) ↦ (x, y_1..y_p, x)``."""

    if p == 0:
        return _leaf("copy", field)
    return Compose(
        _tensor(_leaf("copy", field), _ids(p, field)),
        p + 2,
        _tensor(_leaf("id", field), swap_decomposition(1, p, field)),
    )


@beartype
def gamma_decomposition(n: int, m: int, field: Field) -> Decomposition:
    """``γ_{n,m}: (x, y) ↦ (x, y, x)`` for ``n`` copied and ``m`` passed wires, of width at most ``n + m + 1``.

    Built by peeling one copied wire at a time, ``γ_{n,m} = δ_{1,n-1+m} ; (id_1 ⊗ γ_{n-1,m+1})``.
    """

    if n < 1:
        raise IndexRangeError(f"gamma needs at least one copied wire, got n={n}")
    head = _delta(n - 1 + m, field)
    if n == 1:
        return head
    return Compose(head, n + m + 1, Tensor(_leaf("id", field), gamma_decomposition(n - 1, m + 1, field)))


@beartype
def copy_decomposition(n: int, field: Field) -> Decomposition:
    """Coherent copy ``Δ_n: n → 2n`` (``x ↦ (x, x)``) with width at most ``n + 1``."""

    return gamma_decomposition(n, 0, field)


@beartype
def transpose_decomposition(d: Decomposition) -> Decomposition:
    """Mirror image of ``d``: it evaluates to the transposed matrix and has the same width.

    Copy and add swap roles, so do discard and zero, and the order of every composition is reversed.
    """

    match d:
        case Leaf(atom=atom):
            name = generator_name(atom)
            if name is not None:
                return Leaf(generator(_TRANSPOSED_GENERATOR[name], atom.field))
            return Leaf(transpose(atom))
        case Tensor(left=left, right=right):
            return Tensor(transpose_decomposition(left), transpose_decomposition(right))
        case Compose(left=left, cut=cut, right=right):
            return Compose(transpose_decomposition(right), cut, transpose_decomposition(left))
    raise TypeError(f"Unknown decomposition node {type(d).__name__}")


def _accumulate_step(r: int | Fraction, field: Field) -> Decomposition:
    """``(a, x) ↦ (x, a + r·x)``, width 3 (2 when ``r = 0``)."""

    if r == 0:
        return _leaf("swap", field)
    return compose_all(
        [
            Tensor(_leaf("id", field), _leaf("copy", field)),
            Tensor(_leaf("swap", field), scalar_decomposition(r, field)),
            Tensor(_leaf("id", field), _leaf("add", field)),
        ],
        [3, 3],
    )


def _append_row(row: list[Any], field: Field) -> Decomposition:
    """``x ↦ (x, row·x)`` for ``x`` of length ``n``, width ``n + 1``."""

    n = len(row)
    if n == 1:
        if row[0] == 1:
            return _leaf("copy", field)
        return Compose(_leaf("copy", field), 2, Tensor(_leaf("id", field), scalar_decomposition(row[0], field)))

    parts = [_tensor(_leaf("zero", field), _ids(n, field))]
    for j, value in enumerate(row):
        parts.append(_tensor(_ids(j, field), _accumulate_step(value, field), _ids(n - 1 - j, field)))
    return compose_all(parts, [n + 1] * n)


@beartype
def bound_by_dims(f: Matrix) -> Decomposition:
    """Decomposition of any matrix ``f: n → m`` with width at most ``min(m, n) + 1``.

    When ``n ≤ m`` the last output row ``r`` is peeled off, ``f = (x ↦ (x, r·x)) ;_{n+1} (f' ⊗ id_1)``, and
    ``f'`` is handled recursively; otherwise the transposed matrix is decomposed and the tree mirrored. Rational
    scalars outside ℕ end up as flagged leaves.

    Args:
        f (Matrix): Matrix of shape ``m×n``.

    Returns:
        Decomposition: A decomposition of ``f``.
    """

    m, n = f.shape
    field = f.field
    if n == 0 or m == 0:
        return zero_decomposition(m, n, field)
    if (m, n) == (1, 1):
        return scalar_decomposition(f[0, 0], field)
    if m < n:
        return transpose_decomposition(bound_by_dims(transpose(f)))

    last_row = [f[m - 1, j] for j in range(n)]
    rest = submatrix(f, range(m - 1), range(n))
    return Compose(_append_row(last_row, field), n + 1, Tensor(bound_by_dims(rest), _leaf("id", field)))


@beartype
def flagged_leaves(d: Decomposition) -> list[tuple[str, Matrix]]:
    """Leaves holding rational scalars outside ℕ, with their node paths."""

    return [(path, atom) for path, atom in leaves(d) if isinstance(atom, Matrix) and is_flagged_scalar(atom)]
