from fractions import Fraction
from functools import cache

from beartype import beartype
from beartype.typing import Any

from monowidth.decomposition.tree import PropInterface
from monowidth.linalg.matrix import Matrix, direct_sum, multiply
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CertificateError, InputFormatError

GENERATOR_NAMES = ("copy", "discard", "add", "zero", "swap", "id")

_GENERATOR_ROWS = {
    "copy": ([[1], [1]], 1),
    "discard": ([], 1),
    "add": ([[1, 1]], 2),
    "zero": ([[]], 0),
    "swap": ([[0, 1], [1, 0]], 2),
    "id": ([[1]], 1),
}


@cache
@beartype
def generator(name: str, field: Field) -> Matrix:
    """Matrix of a generator: ``copy`` 1→2, ``discard`` 1→0, ``add`` 2→1, ``zero`` 0→1, ``swap`` and ``id``."""

    try:
        rows, cols = _GENERATOR_ROWS[name]
    except KeyError:
        raise InputFormatError(f"Unknown generator {name!r}, expected one of {', '.join(GENERATOR_NAMES)}") from None
    return Matrix.from_rows(rows, field, cols=cols)


@beartype
def generator_name(f: Matrix) -> str | None:
    """Name of the generator ``f`` equals, if any."""

    for name in GENERATOR_NAMES:
        if f == generator(name, f.field):
            return name
    return None


@beartype
def is_flagged_scalar(f: Matrix) -> bool:
    """A ``1×1`` rational matrix outside ℕ, kept as a leaf when a field factorization leaves the naturals."""

    return f.field is Field.RAT and f.shape == (1, 1) and not f.is_natural()


@beartype
class BialgProp(PropInterface):
    """The prop of matrices: a morphism ``n → m`` is an ``m×n`` matrix, ``f ; g`` is ``g · f``, ``⊗`` direct sum.

    Atoms are the six generators, each weighing ``max(m, n)``. In rational mode, scalars that are not natural
    numbers are accepted as weight-one leaves so that constructions running over ℚ still yield checkable trees.

    Args:
        field (Field): Scalar field of the matrices.
    """

    name = "bialg"

    def __init__(self, field: Field) -> None:
        self.field = field

    def dom(self, f: Matrix) -> int:
        return f.cols

    def cod(self, f: Matrix) -> int:
        return f.rows

    def compose(self, f: Matrix, g: Matrix) -> Matrix:
        return multiply(g, f)

    def tensor(self, f: Matrix, g: Matrix) -> Matrix:
        return direct_sum(f, g)

    def equal(self, f: Matrix, g: Matrix) -> bool:
        return f == g

    def identity(self, n: int) -> Matrix:
        return Matrix.identity(n, self.field)

    def is_atom(self, f: Matrix) -> bool:
        return f.field is self.field and (generator_name(f) is not None or is_flagged_scalar(f))

    def atom_weight(self, f: Matrix) -> int:
        return max(f.rows, f.cols)

    def atom_label(self, f: Matrix) -> str:
        name = generator_name(f)
        if name is not None:
            return name
        return f"scalar {Fraction(f[0, 0])}" if f.shape == (1, 1) else f"matrix {f.to_json()}"

    def encode_atom(self, f: Matrix) -> Any:
        name = generator_name(f)
        if name is not None:
            return name
        return {"matrix": f.to_json(), "shape": list(f.shape)}

    def decode_atom(self, payload: Any) -> Matrix:
        if isinstance(payload, str):
            return generator(payload, self.field)
        if isinstance(payload, dict) and "matrix" in payload:
            cols = payload.get("shape", [None, None])[1]
            return Matrix.from_rows(payload["matrix"], self.field, cols=cols)
        raise CertificateError(f"Cannot read bialg leaf {payload!r}")
