import pytest

from monowidth.bialg.constructions import bound_by_dims, scalar_decomposition
from monowidth.bialg.factorize import best_decomposition
from monowidth.bialg.prop import BialgProp, generator
from monowidth.cli.instances import random_build
from monowidth.decomposition.io import decomposition_from_json, decomposition_to_dot, decomposition_to_json
from monowidth.decomposition.tree import (
    Compose,
    Leaf,
    Tensor,
    arity,
    compose_all,
    leaves,
    node_at,
    node_count,
    replace_at,
    tensor_all,
)
from monowidth.decomposition.width import evaluate, labelled_nodes, max_node_width, validate, width
from monowidth.grph.prop import GrphProp
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import ArityError, CertificateError, IndexRangeError, InputFormatError

RAT = Field.RAT
PROP = BialgProp(RAT)


def leaf(name, field=RAT):
    return Leaf(generator(name, field))


def three_fold_sum():
    """``copy ;2 ((copy ;2 add) ⊗ id) ;2 add``, the scalar 3."""

    return compose_all(
        [leaf("copy"), Tensor(Compose(leaf("copy"), 2, leaf("add")), leaf("id")), leaf("add")],
        [2, 2],
    )


class TestWidth:
    def test_leaf(self):
        assert width(leaf("copy"), PROP) == 2
        assert width(leaf("id"), PROP) == 1

    def test_cut_dominates(self):
        assert width(Compose(leaf("id"), 5, leaf("id")), PROP) == 5

    def test_three_fold_sum(self):
        d = three_fold_sum()
        assert width(d, PROP) == 2
        assert max_node_width(d, PROP) == 2

    def test_labelled_nodes_in_preorder(self):
        d = Tensor(leaf("copy"), Compose(leaf("zero"), 1, leaf("id")))
        labels = [label for label, _ in labelled_nodes(d, PROP)]
        assert labels == ["⊗", "copy", ";1", "zero", "id"]


class TestEvaluate:
    def test_tensor_of_identities(self):
        assert evaluate(Tensor(leaf("id"), leaf("id")), PROP) == Matrix.identity(2, RAT)

    def test_three_fold_sum(self):
        direct = PROP.compose(
            PROP.compose(generator("copy", RAT), PROP.tensor(Matrix.from_rows([[2]], RAT), generator("id", RAT))),
            generator("add", RAT),
        )
        assert evaluate(three_fold_sum(), PROP) == direct == Matrix.from_rows([[3]], RAT)

    def test_cut_mismatch_reports_path(self):
        d = Tensor(leaf("id"), Compose(leaf("copy"), 1, leaf("add")))
        with pytest.raises(ArityError) as excinfo:
            evaluate(d, PROP)
        assert excinfo.value.path == "root.R"

    def test_non_atom_leaf(self):
        with pytest.raises(ArityError, match="not an atom"):
            evaluate(Leaf(Matrix.from_rows([[1, 1], [1, 1]], Field.GF2)), BialgProp(Field.GF2))

    def test_validate(self):
        assert validate(three_fold_sum(), Matrix.from_rows([[3]], RAT), PROP)
        assert not validate(three_fold_sum(), Matrix.from_rows([[2]], RAT), PROP)
        assert not validate(Compose(leaf("copy"), 1, leaf("add")), Matrix.from_rows([[2]], RAT), PROP)


class TestTree:
    def test_arity(self):
        assert arity(three_fold_sum(), PROP) == (1, 1)
        assert arity(Tensor(leaf("copy"), leaf("zero")), PROP) == (1, 3)

    def test_leaves_in_order(self):
        paths = [path for path, _ in leaves(three_fold_sum())]
        assert paths == ["root.L.L", "root.L.R.L.L", "root.L.R.L.R", "root.L.R.R", "root.R"]

    def test_node_count(self):
        assert node_count(three_fold_sum()) == 9

    def test_node_at(self):
        assert node_at(three_fold_sum(), "root.R") == leaf("add")
        with pytest.raises(IndexRangeError):
            node_at(three_fold_sum(), "root.R.L")
        with pytest.raises(IndexRangeError):
            node_at(three_fold_sum(), "top.L")

    def test_replacing_a_subtree_by_a_narrower_one(self):
        d = Tensor(scalar_decomposition(3, RAT, naive=True), leaf("id"))
        replaced = replace_at(d, "root.L", scalar_decomposition(3, RAT))
        assert evaluate(replaced, PROP) == evaluate(d, PROP)
        assert width(replaced, PROP) == 2 < width(d, PROP) == 3

    def test_empty_lists(self):
        with pytest.raises(IndexRangeError):
            tensor_all([])
        with pytest.raises(IndexRangeError):
            compose_all([leaf("id"), leaf("id")], [])


class TestSerialisation:
    def test_json_round_trip(self):
        d = Tensor(three_fold_sum(), scalar_decomposition(-1, RAT))
        payload = decomposition_to_json(d, PROP)
        assert payload["tensor"][1] == {"leaf": {"matrix": [[-1]], "shape": [1, 1]}}
        assert decomposition_from_json(payload, PROP) == d

    @pytest.mark.parametrize(
        "payload",
        [
            {"tensor": [{"leaf": "id"}]},
            {"compose": {"cut": -1, "left": {"leaf": "id"}, "right": {"leaf": "id"}}},
            {"compose": {"cut": 1, "left": {"leaf": "id"}}},
            {"branch": []},
        ],
    )
    def test_malformed(self, payload):
        with pytest.raises(CertificateError):
            decomposition_from_json(payload, PROP)

    def test_unknown_generator(self):
        with pytest.raises(InputFormatError, match="cocopy"):
            decomposition_from_json({"leaf": "cocopy"}, PROP)

    def test_cut_error_names_the_node(self):
        bad = {"compose": {"cut": True, "left": {"leaf": "id"}, "right": {"leaf": "id"}}}
        payload = {"tensor": [{"leaf": "id"}, bad]}
        with pytest.raises(CertificateError, match="root.R"):
            decomposition_from_json(payload, PROP)

    def test_dot(self):
        text = decomposition_to_dot(three_fold_sum(), PROP).to_string()
        assert "copy" in text
        assert ";2" in text


def node_paths(d, path="root"):
    yield path
    for step, child in zip("LR", d.children()):
        yield from node_paths(child, f"{path}.{step}")


def random_trees(rng, count):
    """Trees in both props: random builds of graphs with boundaries and best decompositions of matrices."""

    for _ in range(count):
        field = Field.GF2 if rng.random() < 0.5 else RAT
        if rng.random() < 0.5:
            d, _ = random_build(rng, int(rng.integers(1, 9)), field)
            yield d, GrphProp(field)
        else:
            rows, cols = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            f = Matrix.from_rows(rng.integers(0, 3, size=(rows, cols)).tolist(), field, cols=cols)
            yield best_decomposition(f), BialgProp(field)


class TestRandomTrees:
    def test_width_is_the_largest_node_weight(self, rng):
        for d, prop in random_trees(rng, 200):
            assert width(d, prop) == max_node_width(d, prop)
            assert len(labelled_nodes(d, prop)) == node_count(d)

    def test_replacing_a_subtree(self, rng):
        trees = list(random_trees(rng, 100))
        for d, prop in trees:
            paths = list(node_paths(d))
            path = paths[int(rng.integers(len(paths)))]
            assert replace_at(d, path, node_at(d, path)) == d

            new = trees[int(rng.integers(len(trees)))][0]
            replaced = width(replace_at(d, path, new), prop)
            assert width(new, prop) <= replaced <= max(width(d, prop), width(new, prop))
            if width(new, prop) <= width(node_at(d, path), prop):
                assert replaced <= width(d, prop)

    def test_replacing_a_matrix_subtree_keeps_the_value(self, rng):
        for _ in range(100):
            field = Field.GF2 if rng.random() < 0.5 else RAT
            prop = BialgProp(field)
            rows, cols = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            f = Matrix.from_rows(rng.integers(0, 3, size=(rows, cols)).tolist(), field, cols=cols)
            d = bound_by_dims(f)
            paths = list(node_paths(d))
            path = paths[int(rng.integers(len(paths)))]
            replaced = replace_at(d, path, best_decomposition(evaluate(node_at(d, path), prop)))
            assert validate(replaced, f, prop)
