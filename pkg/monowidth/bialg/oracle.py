"""Exact monoidal width of tiny matrices by exhaustive search over decompositions."""

from itertools import permutations, product

from beartype import beartype
from loguru import logger as log

from monowidth.bialg.constructions import flagged_leaves
from monowidth.bialg.factorize import best_decomposition
from monowidth.bialg.prop import BialgProp, generator_name
from monowidth.decomposition.width import width
from monowidth.linalg.matrix import Matrix, submatrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CapExceededError

DEFAULT_RATIONAL_CAPS = {"max_dim": 3, "max_entry": 3}
DEFAULT_GF2_CAPS = {"max_dim": 4}


def _tensor_splits(f: Matrix) -> list[tuple[Matrix, Matrix]]:
    m, n = f.shape
    splits = []
    for i in range(m + 1):
        for j in range(n + 1):
            if (i, j) in ((0, 0), (m, n)):
                continue
            if submatrix(f, range(i), range(j, n)).is_zero() and submatrix(f, range(i, m), range(j)).is_zero():
                splits.append((submatrix(f, range(i), range(j)), submatrix(f, range(i, m), range(j, n))))
    return splits


def _rank_one_pairs(f: Matrix) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Nonzero natural vectors ``(u, v)`` with ``u·vᵀ ≤ f`` entrywise."""

    rows = [[int(value) for value in row] for row in f.tolist()]
    bound = max((value for row in rows for value in row), default=0)
    pairs = []
    for u in product(range(bound + 1), repeat=f.rows):
        if not any(u):
            continue
        for v in product(range(bound + 1), repeat=f.cols):
            if any(v) and all(u[i] * v[j] <= rows[i][j] for i in range(f.rows) for j in range(f.cols)):
                pairs.append((u, v))
    return pairs


def _natural_factorizations(f: Matrix, k: int) -> set[tuple[Matrix, Matrix]]:
    """All ``(B, C)`` with ``f = B · C`` over ``k`` wires, natural entries, no zero column in ``B`` or row in ``C``."""

    pairs = _rank_one_pairs(f)
    target = tuple(tuple(int(value) for value in row) for row in f.tolist())
    multisets: set[tuple[int, ...]] = set()

    def cover(remainder: tuple[tuple[int, ...], ...], chosen: tuple[int, ...]) -> None:
        position = next(((i, j) for i, row in enumerate(remainder) for j, value in enumerate(row) if value), None)
        if position is None:
            if len(chosen) == k:
                multisets.add(tuple(sorted(chosen)))
            return
        if len(chosen) == k:
            return
        i, j = position
        for index, (u, v) in enumerate(pairs):
            if u[i] * v[j] == 0:
                continue
            if all(u[a] * v[b] <= remainder[a][b] for a in range(f.rows) for b in range(f.cols)):
                reduced = tuple(
                    tuple(remainder[a][b] - u[a] * v[b] for b in range(f.cols)) for a in range(f.rows)
                )
                cover(reduced, chosen + (index,))

    cover(target, ())
    factorizations = set()
    for multiset in multisets:
        for order in set(permutations(multiset)):
            b = Matrix.from_rows([[pairs[t][0][i] for t in order] for i in range(f.rows)], f.field, cols=k)
            c = Matrix.from_rows([list(pairs[t][1]) for t in order], f.field, cols=f.cols)
            factorizations.add((b, c))
    return factorizations


def _gf2_factorizations(f: Matrix, k: int) -> set[tuple[Matrix, Matrix]]:
    """All ``(B, C)`` over GF(2) with ``f = B · C``, no zero column in ``B`` and no zero row in ``C``."""

    targets = f.row_bits()
    factorizations = set()
    for c_rows in product(range(1, 1 << f.cols), repeat=k):
        solutions = []
        for target in targets:
            row_solutions = []
            for selection in range(1 << k):
                value = 0
                for t in range(k):
                    if selection >> t & 1:
                        value ^= c_rows[t]
                if value == target:
                    row_solutions.append(selection)
            if not row_solutions:
                break
            solutions.append(row_solutions)
        else:
            c = Matrix.from_rows([[row >> j & 1 for j in range(f.cols)] for row in c_rows], f.field, cols=f.cols)
            for selections in product(*solutions):
                if any(not any(selection >> t & 1 for selection in selections) for t in range(k)):
                    continue
                b_rows = [[selection >> t & 1 for t in range(k)] for selection in selections]
                b = Matrix.from_rows(b_rows, f.field, cols=k)
                factorizations.add((b, c))
    return factorizations


@beartype
class WidthOracle:
    """Decides ``mwd(f) ≤ t`` by searching atoms, ⊗-splits and factorizations ``f = B · C`` over ``k ≤ t`` wires.

    Factorizations are restricted to factors without zero slices; a zero slice can always be removed with the
    zero and discard transforms without raising the width. Positive answers are memoized per ``(f, t)``;
    negative answers only when they did not rely on a morphism still under investigation.

    Args:
        field (Field): Scalar field of the matrices.
    """

    def __init__(self, field: Field) -> None:
        self.prop = BialgProp(field)
        self.memo: dict[tuple[Matrix, int], bool] = {}
        self.stack: dict[tuple[Matrix, int], int] = {}
        self.factorization_cache: dict[tuple[Matrix, int], set[tuple[Matrix, Matrix]]] = {}

    def factorizations(self, f: Matrix, k: int) -> set[tuple[Matrix, Matrix]]:
        key = (f, k)
        if key not in self.factorization_cache:
            if f.field is Field.GF2:
                self.factorization_cache[key] = _gf2_factorizations(f, k)
            else:
                self.factorization_cache[key] = _natural_factorizations(f, k)
        return self.factorization_cache[key]

    def decomposable(self, f: Matrix, t: int) -> bool:
        return self._decomposable(f, t)[0]

    def _decomposable(self, f: Matrix, t: int) -> tuple[bool, int]:
        """Answer and the lowest stack depth of an in-progress morphism the answer relied on."""

        key = (f, t)
        if key in self.memo:
            return self.memo[key], len(self.stack)
        if key in self.stack:
            return False, self.stack[key]

        depth = len(self.stack)
        if generator_name(f) is not None and self.prop.atom_weight(f) <= t:
            self.memo[key] = True
            return True, depth
        certificate = best_decomposition(f)
        if not flagged_leaves(certificate) and width(certificate, self.prop) <= t:
            self.memo[key] = True
            return True, depth

        self.stack[key] = depth
        lowest = depth + 1
        try:
            for first, second in _tensor_splits(f):
                ok_first, low_first = self._decomposable(first, t)
                lowest = min(lowest, low_first)
                if not ok_first:
                    continue
                ok_second, low_second = self._decomposable(second, t)
                lowest = min(lowest, low_second)
                if ok_second:
                    self.memo[key] = True
                    return True, depth

            for k in range(max(f.rank(), 1), t + 1):
                for b, c in self.factorizations(f, k):
                    ok_c, low_c = self._decomposable(c, t)
                    lowest = min(lowest, low_c)
                    if not ok_c:
                        continue
                    ok_b, low_b = self._decomposable(b, t)
                    lowest = min(lowest, low_b)
                    if ok_b:
                        self.memo[key] = True
                        return True, depth
        finally:
            del self.stack[key]

        if lowest >= depth:
            self.memo[key] = False
        return False, lowest


@beartype
def mwd_oracle(f: Matrix, width_budget: int, caps: dict[str, int] | None = None) -> int | None:
    """Exact monoidal width of a tiny matrix, by iterative deepening on the width bound.

    Args:
        f (Matrix): Matrix within the caps.
        width_budget (int): Largest width to try.
        caps (dict[str, int] | None, optional): ``max_dim`` and, in rational mode, ``max_entry``. Defaults to
            3×3 with entries at most 3 in rational mode and 4×4 over GF(2).

    Raises:
        CapExceededError: ``f`` is larger than the caps allow.

    Returns:
        int | None: The monoidal width, or None when it exceeds ``width_budget``.
    """

    defaults = DEFAULT_GF2_CAPS if f.field is Field.GF2 else DEFAULT_RATIONAL_CAPS
    caps = {**defaults, **(caps or {})}
    if f.rows > caps["max_dim"] or f.cols > caps["max_dim"]:
        raise CapExceededError(f"Width oracle is capped at {caps['max_dim']}x{caps['max_dim']}, got shape {f.shape}")
    if f.field is Field.RAT:
        if not f.is_natural():
            raise CapExceededError("Width oracle only searches natural matrices")
        if f.max_entry() > caps["max_entry"]:
            raise CapExceededError(f"Width oracle is capped at entries <= {caps['max_entry']}, got {f.max_entry()}")

    oracle = WidthOracle(f.field)
    for t in range(1, width_budget + 1):
        log.debug(f"Width oracle tries bound {t} on a {f.rows}x{f.cols} matrix")
        if oracle.decomposable(f, t):
            return t
    log.info(f"Monoidal width exceeds the budget {width_budget}")
    return None
