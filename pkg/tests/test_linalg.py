from fractions import Fraction

import numpy as np
import pytest

from monowidth.linalg.elimination import inverse, left_inverse, rank, right_inverse, row_echelon
from monowidth.linalg.factorization import coupled_rank_factorization, full_rank_factorization
from monowidth.linalg.matrix import (
    Matrix,
    apply_permutation_rows,
    conjugate_by_permutation,
    direct_sum,
    hstack,
    multiply,
    transpose,
)
from monowidth.linalg.natfactor import min_nat_factor_rank
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass, sym_class_equal
from monowidth.utils.errors import (
    CapExceededError,
    FieldModeError,
    IndexRangeError,
    InputFormatError,
    ShapeError,
)

FIELDS = [Field.GF2, Field.RAT]

SLACK = [[1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]


def mat(rows, field=Field.RAT, cols=None):
    return Matrix.from_rows(rows, field, cols=cols)


def random_matrix(rng, rows, cols, field, high=1):
    return mat(rng.integers(0, high + 1, size=(rows, cols)).tolist(), field, cols=cols)


def reshuffled(rng, rows, field):
    """Another representative of the adjacency class of ``rows``: each pair of mirrored entries is split anew."""

    n = len(rows)
    result = [row[:] for row in rows]
    for i in range(n):
        if field is Field.GF2:
            result[i][i] = int(rng.integers(2))
        for j in range(i + 1, n):
            total = rows[i][j] + rows[j][i]
            result[i][j] = int(rng.integers(0, total + 1))
            result[j][i] = total - result[i][j]
    return result


class TestScalars:
    def test_field_aliases(self):
        assert Field.parse("Q") is Field.RAT
        assert Field.parse("GF(2)") is Field.GF2
        assert Field.parse(Field.RAT) is Field.RAT

    def test_unknown_field(self):
        with pytest.raises(InputFormatError):
            Field.parse("reals")

    def test_coerce(self):
        assert Field.GF2.coerce(3) == 1
        assert Field.GF2.coerce("1/3") == 1
        assert Field.RAT.coerce("2/4") == Fraction(1, 2)
        with pytest.raises(InputFormatError):
            Field.GF2.coerce("1/2")

    def test_encode(self):
        assert Field.RAT.encode(Fraction(1, 2)) == "1/2"
        assert Field.RAT.encode(Fraction(3)) == 3
        assert Field.RAT.encode(Fraction(2**70)) == str(2**70)


class TestMatrix:
    def test_multiply(self):
        assert multiply(mat([[1, 0], [1, 2], [0, 0]]), mat([[1], [1]])) == mat([[1], [3], [0]])

    def test_multiply_gf2_reduces(self):
        assert mat([[1, 1]], Field.GF2) @ mat([[1], [1]], Field.GF2) == mat([[0]], Field.GF2)

    def test_multiply_shape_mismatch(self):
        with pytest.raises(ShapeError, match=r"\(2, 2\) and \(3, 1\)"):
            multiply(mat([[1, 0], [0, 1]]), mat([[1], [1], [1]]))

    @pytest.mark.parametrize("field", FIELDS)
    def test_empty_products(self, field):
        assert Matrix.zeros(0, 3, field) @ Matrix.zeros(3, 2, field) == Matrix.zeros(0, 2, field)
        assert Matrix.zeros(2, 0, field) @ Matrix.zeros(0, 3, field) == Matrix.zeros(2, 3, field)

    def test_direct_sum(self):
        assert direct_sum(mat([[2]]), mat([[0, 1]])) == mat([[2, 0, 0], [0, 0, 1]])

    def test_mixed_fields_rejected(self):
        with pytest.raises(ShapeError):
            direct_sum(mat([[1]]), mat([[1]], Field.GF2))

    def test_ragged_rows(self):
        with pytest.raises(InputFormatError):
            mat([[1, 2], [3]])

    def test_index_out_of_range(self):
        with pytest.raises(IndexRangeError):
            mat([[1]])[1, 0]

    def test_cast_to_gf2(self):
        assert mat([[2, 3]]).cast(Field.GF2) == mat([[0, 1]], Field.GF2)

    def test_permutations(self, rng):
        g = random_matrix(rng, 4, 4, Field.RAT, high=3)
        perm = [2, 0, 3, 1]
        sigma = Matrix.permutation(perm, Field.RAT)
        assert apply_permutation_rows(g, perm) == sigma @ g
        assert conjugate_by_permutation(g, perm) == sigma @ g @ transpose(sigma)

    def test_hashable(self):
        assert len({mat([[1, 2]]), mat([[1, 2]]), mat([[1, 2]], Field.GF2)}) == 2


class TestRank:
    def test_example_matrix(self):
        assert rank(mat([[1, 0], [1, 2], [0, 0]])) == 2

    @pytest.mark.parametrize("field", FIELDS)
    def test_slack_matrix(self, field):
        assert rank(mat(SLACK, field)) == 3

    def test_field_dependence(self):
        twos = [[2, 0], [0, 2]]
        assert rank(mat(twos)) == 2
        assert rank(mat(twos, Field.GF2)) == 0

    @pytest.mark.parametrize("field", FIELDS)
    def test_bareiss_agrees_with_gauss_jordan(self, rng, field):
        for _ in range(30):
            a = random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(1, 6)), field, high=3)
            assert rank(a) == row_echelon(a).rank

    def test_rank_of_empty(self):
        assert rank(Matrix.zeros(0, 4, Field.RAT)) == 0

    @pytest.mark.parametrize("field", FIELDS)
    def test_invariants(self, rng, field):
        for _ in range(200):
            rows, cols, inner = (int(value) for value in rng.integers(1, 6, size=3))
            a = random_matrix(rng, rows, cols, field, high=3)
            b = random_matrix(rng, cols, inner, field, high=3)
            r = rank(a)
            assert r <= min(rows, cols)
            assert rank(transpose(a)) == r
            assert rank(a @ b) <= min(r, rank(b))
            assert rank(direct_sum(a, b)) == r + rank(b)
            assert rank(hstack(a, a)) == r
            perm = [int(value) for value in rng.permutation(rows)]
            assert rank(apply_permutation_rows(a, perm)) == r


class TestInverses:
    def test_inverse(self):
        a = mat([[2, 1], [1, 1]])
        assert inverse(a) == mat([[1, -1], [-1, 2]])

    def test_singular(self):
        with pytest.raises(ShapeError, match="singular"):
            inverse(mat([[1, 1], [1, 1]]))

    @pytest.mark.parametrize("field", FIELDS)
    def test_one_sided_inverses(self, field):
        a = mat([[1, 0], [1, 1], [0, 1]], field)
        assert left_inverse(a) @ a == Matrix.identity(2, field)
        assert transpose(a) @ right_inverse(transpose(a)) == Matrix.identity(2, field)


class TestFactorization:
    @pytest.mark.parametrize("field", FIELDS)
    def test_full_rank_factorization(self, rng, field):
        for _ in range(500):
            a = random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(1, 6)), field, high=2)
            factors = full_rank_factorization(a)
            assert factors.left @ factors.right == a
            assert factors.inner == rank(a)
            assert factors.is_natural == (factors.left.is_natural() and factors.right.is_natural())

    def test_coupled_with_empty_boundaries(self):
        c = Matrix.identity(2, Field.GF2)
        empty = Matrix.zeros(2, 0, Field.GF2)
        factors = coupled_rank_factorization(empty, empty, c)
        assert factors.ranks == (2, 2)
        assert factors.l1 @ factors.s @ transpose(factors.l2) == c

    @pytest.mark.parametrize("field", FIELDS)
    def test_coupled_equations(self, rng, field):
        for _ in range(25):
            k1, k2, n = (int(value) for value in rng.integers(1, 5, size=3))
            a1, a2 = random_matrix(rng, k1, n, field), random_matrix(rng, k2, n, field)
            c = random_matrix(rng, k1, k2, field)
            f = coupled_rank_factorization(a1, a2, c)
            assert f.l1 @ hstack(f.n1, f.s @ transpose(f.l2)) == hstack(a1, c)
            assert f.l2 @ hstack(f.n2, transpose(f.s) @ transpose(f.l1)) == hstack(a2, transpose(c))

    def test_coupled_shape_mismatch(self):
        with pytest.raises(ShapeError):
            coupled_rank_factorization(mat([[1]]), mat([[1]]), mat([[1, 1]]))


class TestSymClass:
    @pytest.mark.parametrize("field", FIELDS)
    def test_orientation_is_immaterial(self, field):
        assert sym_class_equal(mat([[0, 1], [0, 0]], field), mat([[0, 0], [1, 0]], field))

    @pytest.mark.parametrize("field", FIELDS)
    def test_transpose(self, rng, field):
        g = random_matrix(rng, 4, 4, field, high=2)
        assert sym_class_equal(g, transpose(g))

    @pytest.mark.parametrize("field", FIELDS)
    def test_doubled_edge(self, field):
        # multiplicities 1 and 2 in rational mode; over GF(2) the doubled edge vanishes instead
        assert not sym_class_equal(mat([[0, 1], [0, 0]], field), mat([[0, 1], [1, 0]], field))
        assert SymClass(mat([[0, 1], [1, 0]], Field.GF2)) == SymClass.empty(2, Field.GF2)

    def test_gf2_drops_self_loops(self):
        assert SymClass(mat([[1, 0], [0, 1]], Field.GF2)) == SymClass.empty(2, Field.GF2)
        assert SymClass(mat([[1, 0], [0, 1]])) != SymClass.empty(2, Field.RAT)

    def test_size_mismatch(self):
        with pytest.raises(ShapeError):
            sym_class_equal(mat([[0]]), mat([[0, 1], [0, 0]]))

    def test_canonical_halves_self_loops(self):
        canonical = SymClass(mat([[1, 2], [1, 0]])).canonical()
        assert canonical == mat([[1, 3], [0, 0]])

    @pytest.mark.parametrize("field", FIELDS)
    def test_equivalence_relation(self, rng, field):
        for _ in range(200):
            n = int(rng.integers(1, 6))
            g = rng.integers(0, 3, size=(n, n)).tolist()
            h = reshuffled(rng, g, field)
            k = reshuffled(rng, h, field)
            g, h, k = mat(g, field), mat(h, field), mat(k, field)
            assert sym_class_equal(g, g)
            assert sym_class_equal(g, h) and sym_class_equal(h, g)
            assert sym_class_equal(h, k) and sym_class_equal(g, k)
            assert SymClass(g) == SymClass(k)
            assert hash(SymClass(g)) == hash(SymClass(k))

    @pytest.mark.parametrize("field", FIELDS)
    def test_changed_edge_is_another_class(self, rng, field):
        for _ in range(200):
            n = int(rng.integers(2, 6))
            g = rng.integers(0, 3, size=(n, n)).tolist()
            h = [row[:] for row in g]
            i, j = (int(value) for value in rng.choice(n, size=2, replace=False))
            h[i][j] += 1
            assert not sym_class_equal(mat(g, field), mat(h, field))
            assert SymClass(mat(g, field)) != SymClass(mat(h, field))

    def test_changed_self_loop_is_another_rational_class(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 6))
            g = rng.integers(0, 3, size=(n, n)).tolist()
            h = [row[:] for row in g]
            i = int(rng.integers(n))
            h[i][i] += 1
            assert not sym_class_equal(mat(g), mat(h))
            assert sym_class_equal(mat(g, Field.GF2), mat(h, Field.GF2))


class TestNaturalFactorization:
    def test_slack_matrix_needs_four_wires(self):
        assert min_nat_factor_rank(mat(SLACK), 4) == 4

    def test_budget_too_small(self):
        assert min_nat_factor_rank(mat(SLACK), 3) is None

    def test_zero_matrix(self):
        assert min_nat_factor_rank(Matrix.zeros(2, 2, Field.RAT), 2) == 0

    def test_at_least_rank(self, rng):
        for _ in range(8):
            a = random_matrix(rng, 3, 3, Field.RAT, high=2)
            assert min_nat_factor_rank(a, 3) >= rank(a)

    def test_caps(self):
        with pytest.raises(CapExceededError):
            min_nat_factor_rank(Matrix.identity(5, Field.RAT), 5)
        with pytest.raises(CapExceededError):
            min_nat_factor_rank(mat([[4]]), 1)

    def test_modes(self):
        with pytest.raises(FieldModeError):
            min_nat_factor_rank(mat([[1]], Field.GF2), 1)
        with pytest.raises(InputFormatError):
            min_nat_factor_rank(mat([[-1]]), 1)


def test_random_matrices_are_reproducible():
    first = random_matrix(np.random.default_rng(3), 3, 3, Field.RAT, high=3)
    second = random_matrix(np.random.default_rng(3), 3, 3, Field.RAT, high=3)
    assert first == second
