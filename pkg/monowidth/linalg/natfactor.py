"""Minimal factorization rank over the natural numbers, by exhaustive search on tiny matrices."""

from itertools import product

import numpy as np
from beartype import beartype
from loguru import logger as log

from monowidth.linalg.elimination import bareiss_rank
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CapExceededError, FieldModeError, InputFormatError

DEFAULT_MAX_DIM = 4
DEFAULT_MAX_ENTRY = 3


def _nonzero_vectors(length: int, bound: int) -> np.ndarray:
    vectors = np.array(list(product(range(bound + 1), repeat=length)), dtype=np.int64).reshape(-1, length)
    return vectors[vectors.any(axis=1)]


def _rank_one_terms(a: np.ndarray) -> np.ndarray:
    """All distinct nonzero products ``u·vᵀ`` bounded entrywise by ``a``."""

    bound = int(a.max())
    us = _nonzero_vectors(a.shape[0], bound)
    vs = _nonzero_vectors(a.shape[1], bound)
    terms = us[:, None, :, None] * vs[None, :, None, :]
    terms = terms.reshape(-1, *a.shape)
    terms = terms[(terms <= a).all(axis=(1, 2))]
    return np.unique(terms, axis=0)


@beartype
def min_nat_factor_rank(
    a: Matrix, k_max: int, max_dim: int = DEFAULT_MAX_DIM, max_entry: int = DEFAULT_MAX_ENTRY
) -> int | None:
    """Least ``k ≤ k_max`` with ``a = b · c`` for natural matrices ``b`` (``m×k``) and ``c`` (``k×n``).

    A factorization through ``k`` wires is a sum of ``k`` natural rank-one terms ``u·vᵀ``, each bounded entrywise
    by ``a``. The search removes one term at a time, always covering the first nonzero entry of the remainder,
    and prunes when the rational rank of the remainder exceeds the number of terms left.

    Args:
        a (Matrix): Natural matrix in rational mode.
        k_max (int): Largest inner dimension to try.
        max_dim (int, optional): Hard cap on both dimensions. Defaults to 4.
        max_entry (int, optional): Hard cap on the entries. Defaults to 3.

    Returns:
        int | None: The natural factorization rank, or None when it exceeds ``k_max``.
    """

    if a.field is not Field.RAT:
        raise FieldModeError("Natural factorization rank is only defined in rational mode")
    if not a.is_natural():
        raise InputFormatError("Natural factorization rank needs a matrix with nonnegative integer entries")
    if a.rows > max_dim or a.cols > max_dim or a.max_entry() > max_entry:
        raise CapExceededError(
            f"Natural factorization search is capped at {max_dim}x{max_dim} with entries <= {max_entry}, "
            f"got shape {a.shape} with max entry {a.max_entry()}"
        )
    if a.is_zero():
        return 0

    target = np.array([[int(value) for value in row] for row in a.tolist()], dtype=np.int64)
    terms = _rank_one_terms(target)
    log.debug(f"Natural factorization search over {len(terms)} rank-one terms")
    failed: set[tuple[bytes, int]] = set()

    def search(remainder: np.ndarray, left: int) -> bool:
        if not remainder.any():
            return True
        if left == 0 or bareiss_rank(remainder.tolist()) > left:
            return False
        key = (remainder.tobytes(), left)
        if key in failed:
            return False
        i, j = np.argwhere(remainder)[0]
        fitting = terms[(terms[:, i, j] > 0) & (terms <= remainder).all(axis=(1, 2))]
        if any(search(remainder - term, left - 1) for term in fitting):
            return True
        failed.add(key)
        return False

    for k in range(a.rank(), k_max + 1):
        if search(target, k):
            log.debug(f"Natural factorization rank is {k}, rational rank {a.rank()}")
            return k
    log.info(f"Natural factorization rank exceeds {k_max}")
    return None
