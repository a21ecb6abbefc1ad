from beartype import beartype
from beartype.typing import Any

from monowidth.grph.bounded import BoundedGraph
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import CertificateError, InputFormatError


@beartype
def bounded_to_json(g: BoundedGraph) -> dict[str, Any]:
    """``{"n", "m", "k", "G", "L", "R", "P", "F"}`` with row lists; ``G`` and ``F`` are the stored representatives."""

    return {
        "n": g.n,
        "m": g.m,
        "k": g.k,
        "G": g.adjacency.rep.to_json(),
        "L": g.left.to_json(),
        "R": g.right.to_json(),
        "P": g.passing.to_json(),
        "F": g.feedback.rep.to_json(),
    }


def _matrix(payload: dict[str, Any], key: str, rows: int, cols: int, field: Field) -> Matrix:
    value = payload.get(key, [])
    if rows == 0 or cols == 0:
        return Matrix.zeros(rows, cols, field)
    matrix = Matrix.from_rows(value, field)
    if matrix.shape != (rows, cols):
        raise CertificateError(f"'{key}' has shape {matrix.shape}, expected {(rows, cols)}")
    return matrix


@beartype
def bounded_from_json(payload: dict[str, Any], field: Field) -> BoundedGraph:
    """Inverse of :func:`bounded_to_json`; matrices with a zero dimension may be omitted.

    Raises:
        CertificateError: A matrix does not have the shape the arities demand.
    """

    try:
        n, m, k = (int(payload[key]) for key in ("n", "m", "k"))
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f"A graph with boundaries needs integer 'n', 'm' and 'k': {e}") from e
    return BoundedGraph(
        SymClass(_matrix(payload, "G", k, k, field)),
        _matrix(payload, "L", k, n, field),
        _matrix(payload, "R", k, m, field),
        _matrix(payload, "P", m, n, field),
        SymClass(_matrix(payload, "F", m, m, field)),
    )
