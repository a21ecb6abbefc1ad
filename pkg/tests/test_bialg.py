from fractions import Fraction
from itertools import product

import pytest

from monowidth.bialg.constructions import (
    bound_by_dims,
    copy_decomposition,
    flagged_leaves,
    gamma_decomposition,
    identity_decomposition,
    scalar_decomposition,
    swap_decomposition,
    transpose_decomposition,
    zero_decomposition,
)
from monowidth.bialg.factorize import best_decomposition, rank_decomposition_of_matrix, tensor_factorize
from monowidth.bialg.oracle import mwd_oracle
from monowidth.bialg.prop import BialgProp, generator, generator_name
from monowidth.bialg.transforms import discard_transform, tensor_root_transform, zero_transform
from monowidth.decomposition.tree import Tensor
from monowidth.decomposition.width import evaluate, validate, width
from monowidth.linalg.matrix import Matrix, direct_sum, direct_sum_all, submatrix, transpose, vstack
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CapExceededError, CertificateError, FieldModeError, IndexRangeError, InputFormatError

GF2, RAT = Field.GF2, Field.RAT
FIELDS = [GF2, RAT]
EXAMPLE = [[1, 0], [1, 2], [0, 0]]


def mat(rows, field=RAT, cols=None):
    return Matrix.from_rows(rows, field, cols=cols)


def random_matrix(rng, rows, cols, field, high=1):
    return mat(rng.integers(0, high + 1, size=(rows, cols)).tolist(), field, cols=cols)


def swap_matrix(n, m, field):
    """Outputs ``0..m-1`` read inputs ``n..n+m-1``, outputs ``m..m+n-1`` read inputs ``0..n-1``."""

    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(m):
        rows[i][n + i] = 1
    for j in range(n):
        rows[m + j][j] = 1
    return mat(rows, field, cols=n + m)


class TestGenerators:
    def test_shapes(self):
        shapes = {name: generator(name, GF2).shape for name in ("copy", "discard", "add", "zero", "swap", "id")}
        expected = {"copy": (2, 1), "discard": (0, 1), "add": (1, 2), "zero": (1, 0), "swap": (2, 2), "id": (1, 1)}
        assert shapes == expected

    def test_names(self):
        assert generator_name(Matrix.identity(1, RAT)) == "id"
        assert generator_name(mat([[1, 1]])) == "add"
        assert generator_name(mat([[2]])) is None

    def test_unknown(self):
        with pytest.raises(InputFormatError):
            generator("cocopy", GF2)

    def test_weights(self):
        prop = BialgProp(GF2)
        assert [prop.atom_weight(generator(name, GF2)) for name in ("copy", "discard", "zero", "id")] == [2, 1, 1, 1]

    def test_flagged_scalar_is_a_rational_atom(self):
        assert BialgProp(RAT).is_atom(mat([["1/2"]]))
        assert not BialgProp(RAT).is_atom(mat([[2]]))


class TestScalars:
    def test_three(self):
        d = scalar_decomposition(3, RAT)
        assert validate(d, mat([[3]]), BialgProp(RAT))
        assert width(d, BialgProp(RAT)) == 2

    @pytest.mark.parametrize("k", [0, 1, 2, 5, 8])
    def test_width_never_exceeds_two(self, k):
        d = scalar_decomposition(k, RAT)
        assert validate(d, mat([[k]]), BialgProp(RAT))
        assert width(d, BialgProp(RAT)) <= 2

    def test_naive_width_grows(self):
        d = scalar_decomposition(4, RAT, naive=True)
        assert validate(d, mat([[4]]), BialgProp(RAT))
        assert width(d, BialgProp(RAT)) == 4

    def test_gf2(self):
        assert evaluate(scalar_decomposition(0, GF2), BialgProp(GF2)) == mat([[0]], GF2)
        with pytest.raises(FieldModeError):
            scalar_decomposition(2, GF2)

    def test_outside_naturals_is_flagged(self):
        d = scalar_decomposition(Fraction(1, 2), RAT)
        assert [path for path, _ in flagged_leaves(d)] == ["root"]


class TestConstructions:
    @pytest.mark.parametrize("field", FIELDS)
    def test_identity_and_zero(self, field):
        prop = BialgProp(field)
        assert validate(identity_decomposition(0, field), Matrix.identity(0, field), prop)
        assert validate(identity_decomposition(3, field), Matrix.identity(3, field), prop)
        assert validate(zero_decomposition(2, 3, field), Matrix.zeros(2, 3, field), prop)
        assert width(zero_decomposition(2, 3, field), prop) == 1

    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 3), (3, 2), (0, 2)])
    def test_swap(self, n, m):
        d = swap_decomposition(n, m, GF2)
        assert validate(d, swap_matrix(n, m, GF2), BialgProp(GF2))
        assert width(d, BialgProp(GF2)) <= n + m

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_copy(self, n):
        d = copy_decomposition(n, RAT)
        expected = vstack(Matrix.identity(n, RAT), Matrix.identity(n, RAT))
        assert validate(d, expected, BialgProp(RAT))
        assert width(d, BialgProp(RAT)) <= n + 1

    def test_copy_two_wires(self):
        assert width(copy_decomposition(2, GF2), BialgProp(GF2)) <= 3

    @pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 1)])
    def test_gamma(self, n, m):
        expected = vstack(Matrix.identity(n + m, GF2), submatrix(Matrix.identity(n + m, GF2), range(n), range(n + m)))
        d = gamma_decomposition(n, m, GF2)
        assert validate(d, expected, BialgProp(GF2))
        assert width(d, BialgProp(GF2)) <= n + m + 1

    def test_gamma_needs_a_copied_wire(self):
        with pytest.raises(IndexRangeError):
            gamma_decomposition(0, 2, GF2)

    def test_example_matrix(self):
        d = bound_by_dims(mat(EXAMPLE))
        assert validate(d, mat(EXAMPLE), BialgProp(RAT))
        assert width(d, BialgProp(RAT)) <= 3

    @pytest.mark.parametrize("field", FIELDS)
    def test_bound_by_dims(self, rng, field):
        prop = BialgProp(field)
        for _ in range(25):
            rows, cols = (int(value) for value in rng.integers(0, 5, size=2))
            f = random_matrix(rng, rows, cols, field, high=3)
            d = bound_by_dims(f)
            assert validate(d, f, prop)
            assert width(d, prop) <= min(rows, cols) + 1

    @pytest.mark.parametrize("field", FIELDS)
    def test_transpose_mirrors(self, rng, field):
        prop = BialgProp(field)
        for _ in range(10):
            f = random_matrix(rng, 3, 2, field, high=2)
            d = bound_by_dims(f)
            mirrored = transpose_decomposition(d)
            assert evaluate(mirrored, prop) == transpose(f)
            assert width(mirrored, prop) == width(d, prop)


class TestFactorize:
    def test_tensor_factors(self):
        factors = tensor_factorize(mat([[2, 0, 0], [0, 0, 1]]))
        assert factors == [mat([[2]]), Matrix.zeros(0, 1, RAT), mat([[1]])]

    def test_zero_scalar_is_discard_then_zero(self):
        assert tensor_factorize(mat([[0]], GF2)) == [Matrix.zeros(0, 1, GF2), Matrix.zeros(1, 0, GF2)]

    def test_example_matrix(self):
        assert tensor_factorize(mat(EXAMPLE)) == [mat([[1, 0], [1, 2]]), Matrix.zeros(1, 0, RAT)]

    @pytest.mark.parametrize("field", FIELDS)
    def test_factors_are_indecomposable(self, rng, field):
        for _ in range(25):
            f = random_matrix(rng, int(rng.integers(1, 5)), int(rng.integers(1, 5)), field)
            factors = tensor_factorize(f)
            assert direct_sum_all(factors, field) == f
            assert all(tensor_factorize(factor) == [factor] for factor in factors)

    @pytest.mark.parametrize("field", FIELDS)
    def test_best_decomposition(self, rng, field):
        prop = BialgProp(field)
        for _ in range(200):
            rows, cols = int(rng.integers(1, 7)), int(rng.integers(1, 7))
            f = random_matrix(rng, rows, cols, field, high=3 if field is RAT else 1)
            d = best_decomposition(f)
            assert validate(d, f, prop)
            largest = max(factor.rank() for factor in tensor_factorize(f))
            assert largest <= width(d, prop) <= largest + 1

    def test_rank_decomposition(self, rng):
        prop = BialgProp(GF2)
        for _ in range(25):
            f = random_matrix(rng, int(rng.integers(0, 5)), int(rng.integers(0, 5)), GF2)
            d = rank_decomposition_of_matrix(f)
            assert validate(d, f, prop)
            assert width(d, prop) <= f.rank() + 1

    def test_rank_factors_outside_naturals_are_flagged(self):
        f = mat([[4, 6], [6, 9]])
        d = rank_decomposition_of_matrix(f)
        assert validate(d, f, BialgProp(RAT))
        assert flagged_leaves(d)


class TestTransforms:
    @pytest.mark.parametrize("field", FIELDS)
    def test_discard_and_zero(self, rng, field):
        prop = BialgProp(field)
        for _ in range(200):
            rows, cols = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            f = random_matrix(rng, rows, cols, field, high=2 if field is RAT else 1)
            d = best_decomposition(f) if rng.random() < 0.5 else bound_by_dims(f)
            for k in range(rows + 1):
                discarded = discard_transform(d, k, prop)
                assert validate(discarded, submatrix(f, range(rows - k), range(cols)), prop)
                assert width(discarded, prop) <= width(d, prop)
            for k in range(cols + 1):
                zeroed = zero_transform(d, k, prop)
                assert validate(zeroed, submatrix(f, range(rows), range(cols - k)), prop)
                assert width(zeroed, prop) <= width(d, prop)

    def test_out_of_range(self):
        prop = BialgProp(GF2)
        with pytest.raises(IndexRangeError):
            discard_transform(bound_by_dims(Matrix.identity(2, GF2)), 3, prop)

    def test_tensor_root(self):
        prop = BialgProp(GF2)
        f1, f2 = mat([[1, 1]], GF2), mat([[1], [1]], GF2)
        d = bound_by_dims(direct_sum(f1, f2))
        result = tensor_root_transform(d, f1, f2, prop)
        assert isinstance(result, Tensor)
        assert validate(result, direct_sum(f1, f2), prop)
        assert width(result, prop) <= width(d, prop)

    def test_tensor_root_with_a_zero_block(self):
        prop = BialgProp(GF2)
        f1, f2 = Matrix.zeros(1, 2, GF2), mat([[1]], GF2)
        d = bound_by_dims(direct_sum(f1, f2))
        result = tensor_root_transform(d, f1, f2, prop)
        assert isinstance(result, Tensor)
        assert validate(result, direct_sum(f1, f2), prop)
        assert width(result, prop) <= width(d, prop)

    def test_tensor_root_rejects_other_blocks(self):
        prop = BialgProp(GF2)
        f1, f2 = mat([[1, 1]], GF2), mat([[1], [1]], GF2)
        with pytest.raises(CertificateError):
            tensor_root_transform(bound_by_dims(direct_sum(f1, f2)), f2, f1, prop)


class TestOracle:
    def test_identity(self):
        assert mwd_oracle(Matrix.identity(2, GF2), 4) == 1

    def test_doubled_identity(self):
        assert mwd_oracle(mat([[2, 0], [0, 2]]), 4) == 2

    def test_scalar_three(self):
        assert mwd_oracle(mat([[3]]), 4) == 2

    def test_all_ones(self):
        assert mwd_oracle(mat([[1, 1], [1, 1]], GF2), 4) == 2

    def test_budget_exceeded(self):
        assert mwd_oracle(mat([[3]]), 1) is None

    def test_caps(self):
        with pytest.raises(CapExceededError):
            mwd_oracle(Matrix.identity(4, RAT), 4)
        with pytest.raises(CapExceededError):
            mwd_oracle(mat([["1/2"]]), 4)
        with pytest.raises(CapExceededError):
            mwd_oracle(Matrix.identity(2, RAT), 4, {"max_dim": 1})

    def test_gf2_sweep(self):
        prop = BialgProp(GF2)
        for rows, cols in product(range(3), repeat=2):
            if (rows, cols) == (0, 0):
                continue
            for bits in product((0, 1), repeat=rows * cols):
                f = mat([list(bits[i * cols : (i + 1) * cols]) for i in range(rows)], GF2, cols=cols)
                largest = max(factor.rank() for factor in tensor_factorize(f))
                value = mwd_oracle(f, 4)
                assert largest <= value <= largest + 1
                assert value <= width(best_decomposition(f), prop)

    def test_rational_sample(self, rng):
        prop = BialgProp(RAT)
        for _ in range(40):
            f = random_matrix(rng, int(rng.integers(1, 3)), int(rng.integers(1, 3)), RAT, high=3)
            largest = max(factor.rank() for factor in tensor_factorize(f))
            value = mwd_oracle(f, 4)
            assert largest <= value <= largest + 1
            d = best_decomposition(f)
            if not flagged_leaves(d):
                assert value <= width(d, prop)


class TestBialgLaws:
    @pytest.mark.parametrize("field", FIELDS)
    def test_associativity(self, rng, field):
        prop = BialgProp(field)
        for _ in range(500):
            a, b, c, d = (int(value) for value in rng.integers(0, 5, size=4))
            f, g, h = (random_matrix(rng, rows, cols, field, high=2) for rows, cols in ((b, a), (c, b), (d, c)))
            assert prop.compose(prop.compose(f, g), h) == prop.compose(f, prop.compose(g, h))
            assert prop.tensor(prop.tensor(f, g), h) == prop.tensor(f, prop.tensor(g, h))

    @pytest.mark.parametrize("field", FIELDS)
    def test_identities(self, rng, field):
        prop = BialgProp(field)
        for _ in range(500):
            rows, cols = (int(value) for value in rng.integers(0, 5, size=2))
            f = random_matrix(rng, rows, cols, field, high=2)
            assert prop.compose(prop.identity(cols), f) == f
            assert prop.compose(f, prop.identity(rows)) == f
            assert prop.tensor(prop.identity(0), f) == f == prop.tensor(f, prop.identity(0))

    @pytest.mark.parametrize("field", FIELDS)
    def test_interchange(self, rng, field):
        prop = BialgProp(field)
        for _ in range(500):
            a1, b1, c1, a2, b2, c2 = (int(value) for value in rng.integers(0, 4, size=6))
            f1, g1 = random_matrix(rng, b1, a1, field, high=2), random_matrix(rng, c1, b1, field, high=2)
            f2, g2 = random_matrix(rng, b2, a2, field, high=2), random_matrix(rng, c2, b2, field, high=2)
            sequential = prop.tensor(prop.compose(f1, g1), prop.compose(f2, g2))
            assert sequential == prop.compose(prop.tensor(f1, f2), prop.tensor(g1, g2))
