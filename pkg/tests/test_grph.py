from fractions import Fraction

import pytest

from monowidth.cli.instances import make_rng, random_bounded_graph, random_build, random_dangling_graph
from monowidth.decomposition.tree import Compose, Leaf
from monowidth.decomposition.width import evaluate, validate, width
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.families import complete_graph, cycle_graph, edgeless_graph, path_graph
from monowidth.graphs.recursive import RecRankDec, rec_width
from monowidth.graphs.solver import rrwd_exact, rwd_exact
from monowidth.grph.bounded import (
    BoundedGraph,
    compose,
    cups,
    equal,
    find_permutation,
    from_dangling,
    glue,
    invariants_equal,
    tensor,
    to_dangling,
)
from monowidth.grph.io import bounded_from_json, bounded_to_json
from monowidth.grph.prop import GRAPH_GENERATOR_NAMES, GrphProp, graph_generator
from monowidth.grph.translate import (
    absorb_feedback,
    lower_bound_witness,
    monoidal_to_rank,
    mwd_graph_bounds,
    rank_to_monoidal,
    rebase_boundary,
)
from monowidth.linalg.elimination import rank
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.linalg.symclass import SymClass
from monowidth.utils.errors import CapExceededError, CertificateError, FieldModeError, InputFormatError, ShapeError

GF2, RAT = Field.GF2, Field.RAT
PROP = GrphProp(GF2)


def edge_state():
    return from_dangling(DanglingGraph.from_edges(2, [[0, 1]]))


def stub():
    """``0 → 1``: one vertex hanging off the right port."""

    return compose(BoundedGraph.cup(GF2), tensor(BoundedGraph.identity(1, GF2), BoundedGraph.vertex(GF2)))


class TestBoundedGraph:
    def test_cup_then_two_vertices_is_an_edge(self):
        vertices = tensor(BoundedGraph.vertex(GF2), BoundedGraph.vertex(GF2))
        assert compose(BoundedGraph.cup(GF2), vertices) == edge_state()

    def test_stub(self):
        g = stub()
        assert (g.k, g.n, g.m) == (1, 0, 1)
        assert g.right == Matrix.from_rows([[1]], GF2)

    @pytest.mark.parametrize("field", [GF2, RAT])
    def test_embedding_is_functorial(self, rng, field):
        high = 2 if field is RAT else 1
        for _ in range(200):
            n, k, m = (int(value) for value in rng.integers(0, 4, size=3))
            a = Matrix.from_rows(rng.integers(0, high + 1, size=(k, n)).tolist(), field, cols=n)
            b = Matrix.from_rows(rng.integers(0, high + 1, size=(m, k)).tolist(), field, cols=k)
            assert compose(BoundedGraph.embed(a), BoundedGraph.embed(b)) == BoundedGraph.embed(b @ a)

    def test_identity_laws(self, rng):
        g = random_bounded_graph(rng, 2, 3, 3)
        assert compose(BoundedGraph.identity(2, GF2), g) == g
        assert compose(g, BoundedGraph.identity(3, GF2)) == g

    @pytest.mark.parametrize("field", [GF2, RAT])
    def test_associativity(self, rng, field):
        for _ in range(500):
            a, b, c, d = (int(value) for value in rng.integers(0, 4, size=4))
            k1, k2, k3 = (int(value) for value in rng.integers(0, 4, size=3))
            f = random_bounded_graph(rng, a, b, k1, field)
            g = random_bounded_graph(rng, b, c, k2, field)
            h = random_bounded_graph(rng, c, d, k3, field)
            assert compose(compose(f, g), h) == compose(f, compose(g, h))
            assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))

    @pytest.mark.parametrize("field", [GF2, RAT])
    def test_interchange(self, rng, field):
        for _ in range(500):
            a1, b1, c1, a2, b2, c2 = (int(value) for value in rng.integers(0, 3, size=6))
            k = [int(value) for value in rng.integers(0, 3, size=4)]
            f1, g1 = random_bounded_graph(rng, a1, b1, k[0], field), random_bounded_graph(rng, b1, c1, k[1], field)
            f2, g2 = random_bounded_graph(rng, a2, b2, k[2], field), random_bounded_graph(rng, b2, c2, k[3], field)
            sequential = compose(tensor(f1, f2), tensor(g1, g2))
            parallel = tensor(compose(f1, g1), compose(f2, g2))
            assert equal(sequential, parallel)
            assert GrphProp(field).equal(sequential, parallel)

    def test_interchange_holds_up_to_vertex_order(self):
        vertex = BoundedGraph.vertex(GF2)
        sequential = compose(tensor(stub(), stub()), tensor(vertex, vertex))
        parallel = tensor(compose(stub(), vertex), compose(stub(), vertex))
        assert sequential != parallel
        assert equal(sequential, parallel)

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            compose(BoundedGraph.cup(GF2), BoundedGraph.vertex(GF2))
        left, right, passing = Matrix.zeros(2, 1, GF2), Matrix.zeros(1, 0, GF2), Matrix.zeros(0, 1, GF2)
        with pytest.raises(ShapeError):
            BoundedGraph(SymClass.empty(1, GF2), left, right, passing, SymClass.empty(0, GF2))

    def test_cups(self):
        expected = Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]], GF2)
        assert cups(2, GF2).feedback == SymClass(expected)
        assert cups(0, GF2) == BoundedGraph.identity(0, GF2)

    def test_glue(self):
        single = from_dangling(DanglingGraph.from_edges(1, [], boundary=[[0, 0]]))
        assert glue(single, single) == edge_state()
        with pytest.raises(ShapeError):
            glue(single, stub())

    def test_dangling_round_trip(self, rng):
        graph = random_dangling_graph(rng, 5, 2)
        assert to_dangling(from_dangling(graph)) == graph


class TestEquality:
    def test_permutation_found(self, rng):
        g = from_dangling(random_dangling_graph(rng, 6, 2))
        h = g.permute([2, 0, 5, 1, 4, 3])
        perm = find_permutation(g, h)
        assert perm is not None
        assert g.permute(perm) == h

    def test_identical(self):
        assert find_permutation(edge_state(), edge_state()) == [0, 1]

    def test_different_graphs(self):
        assert find_permutation(from_dangling(path_graph(4)), from_dangling(cycle_graph(4))) is None
        assert not equal(edge_state(), from_dangling(edgeless_graph(2)))
        assert not equal(edge_state(), from_dangling(path_graph(3)))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            find_permutation(from_dangling(complete_graph(11)), from_dangling(path_graph(11)))

    def test_invariants(self, rng):
        g = from_dangling(random_dangling_graph(rng, 12, 2))
        assert invariants_equal(g, g.permute(list(reversed(range(12)))))
        star = DanglingGraph.from_edges(4, [[0, 1], [0, 2], [0, 3]])
        assert not invariants_equal(from_dangling(path_graph(4)), from_dangling(star))


class TestProp:
    def test_generators(self):
        assert graph_generator("cup", GF2) == BoundedGraph.cup(GF2)
        assert graph_generator("copy", GF2).k == 0
        assert set(GRAPH_GENERATOR_NAMES) >= {"cup", "vertex", "copy", "add"}
        with pytest.raises(InputFormatError):
            graph_generator("cap", GF2)

    def test_weights_count_vertices(self, rng):
        assert PROP.atom_weight(BoundedGraph.cup(GF2)) == 0
        assert PROP.atom_weight(random_bounded_graph(rng, 1, 1, 3)) == 3

    def test_atom_encoding(self, rng):
        g = random_bounded_graph(rng, 2, 1, 3)
        assert PROP.decode_atom(PROP.encode_atom(g)) == g
        assert PROP.encode_atom(BoundedGraph.vertex(GF2)) == "vertex"

    def test_json(self, rng):
        g = random_bounded_graph(rng, 2, 2, 4)
        assert bounded_from_json(bounded_to_json(g), GF2) == g

    def test_bad_json(self):
        with pytest.raises(CertificateError):
            bounded_from_json({"n": 1, "m": 0, "k": 1, "L": [[1, 1]]}, GF2)
        with pytest.raises(InputFormatError):
            bounded_from_json({"m": 0, "k": 1}, GF2)

    def test_random_builds(self):
        for seed in range(10):
            d, g = random_build(make_rng(seed), 6)
            assert validate(d, g, PROP)
            again, _ = random_build(make_rng(seed), 6)
            assert again == d


class TestTranslations:
    def test_rank_to_monoidal(self, rng):
        for _ in range(100):
            graph = random_dangling_graph(rng, int(rng.integers(1, 8)), int(rng.integers(0, 4)))
            _, decomposition = rrwd_exact(graph)
            d = rank_to_monoidal(decomposition)
            assert validate(d, from_dangling(graph), PROP)
            assert width(d, PROP) <= max(1, 2 * rec_width(decomposition))

    def test_coarse_leaves(self):
        _, decomposition = rrwd_exact(cycle_graph(6))
        d = rank_to_monoidal(decomposition, leaf_size=3)
        assert validate(d, from_dangling(cycle_graph(6)), PROP)

    def test_rational_graphs_are_refused(self):
        graph = complete_graph(3, RAT)
        _, decomposition = rrwd_exact(graph)
        with pytest.raises(FieldModeError):
            rank_to_monoidal(decomposition)

    def test_back_to_rank(self, rng):
        for _ in range(50):
            graph = random_dangling_graph(rng, int(rng.integers(1, 8)), int(rng.integers(0, 4)))
            _, decomposition = rrwd_exact(graph)
            state = from_dangling(graph)
            d = rank_to_monoidal(decomposition)
            result = monoidal_to_rank(d, state)
            assert result.graph == graph
            assert rec_width(result) <= 2 * max(width(d, PROP), rank(graph.boundary))

    def test_random_builds_back_to_rank(self):
        for seed in range(100):
            rng = make_rng(seed)
            d, g = random_build(rng, int(rng.integers(1, 7)))
            result = monoidal_to_rank(d, g)
            assert result.graph == to_dangling(g)
            assert rec_width(result) <= 2 * max(width(d, PROP), rank(g.left), rank(g.right))

    def test_closed_states_bound_rank_width(self):
        for seed in range(100):
            rng = make_rng(seed)
            d, g = random_build(rng, int(rng.integers(1, 5)))
            opening = Leaf(random_bounded_graph(rng, 0, g.n, int(rng.integers(0, 2))))
            closing = Leaf(random_bounded_graph(rng, g.m, 0, int(rng.integers(0, 2))))
            closed = Compose(Compose(opening, g.n, d), g.m, closing)
            state = evaluate(closed, PROP)
            assert (state.n, state.m) == (0, 0)
            assert rwd_exact(to_dangling(state))[0] <= 2 * width(closed, PROP)
            assert rec_width(monoidal_to_rank(closed, state)) <= 2 * width(closed, PROP)

    def test_lower_bound_witness(self):
        d = Compose(Leaf(BoundedGraph.cup(GF2)), 2, Leaf(tensor(BoundedGraph.vertex(GF2), BoundedGraph.vertex(GF2))))
        decomposition, witness = lower_bound_witness(d, edge_state())
        assert decomposition.shape == (0, 1)
        assert witness == 1
        assert width(d, PROP) == 2

    def test_wrong_graph(self):
        d = Compose(Leaf(BoundedGraph.cup(GF2)), 2, Leaf(tensor(BoundedGraph.vertex(GF2), BoundedGraph.vertex(GF2))))
        with pytest.raises(CertificateError):
            monoidal_to_rank(d, from_dangling(edgeless_graph(2)))

    def test_rebase(self, rng):
        graph = random_dangling_graph(rng, 5, 2)
        _, decomposition = rrwd_exact(graph)
        swap = Matrix.from_rows([[0, 1], [1, 0]], GF2)
        assert rec_width(rebase_boundary(decomposition, swap, full_rank=True)) == rec_width(decomposition)
        merged = rebase_boundary(decomposition, Matrix.from_rows([[1], [1]], GF2))
        assert rec_width(merged) <= rec_width(decomposition)
        with pytest.raises(ShapeError):
            rebase_boundary(decomposition, Matrix.identity(3, GF2))

    def test_absorb_feedback(self):
        decomposition = RecRankDec(to_dangling(tensor(BoundedGraph.vertex(GF2), BoundedGraph.vertex(GF2))), (0, 1))
        feedback = Matrix.from_rows([[0, 1], [0, 0]], GF2)
        absorbed = absorb_feedback(decomposition, feedback, Matrix.zeros(0, 2, GF2))
        assert absorbed.graph.edges() == [(0, 1, 1)]
        assert rec_width(absorbed) <= rec_width(decomposition)
        with pytest.raises(ShapeError):
            absorb_feedback(decomposition, Matrix.identity(3, GF2), Matrix.zeros(0, 3, GF2))


class TestGraphBounds:
    def test_complete(self):
        bounds = mwd_graph_bounds(complete_graph(4))
        assert bounds.lower == Fraction(1, 2)
        assert bounds.upper <= 2
        assert validate(bounds.certificate, bounds.state, PROP)

    def test_edgeless(self):
        bounds = mwd_graph_bounds(edgeless_graph(3))
        assert bounds.lower == 0
        assert bounds.upper <= 1

    def test_cycle(self):
        bounds = mwd_graph_bounds(cycle_graph(5))
        assert (bounds.lower, bounds.rank_width) == (1, 2)
        assert bounds.upper <= 4
        assert evaluate(bounds.certificate, PROP).k == 5

    def test_boundary_is_ignored(self):
        graph = DanglingGraph.from_edges(3, [[0, 1], [1, 2]], boundary=[[0, 0]])
        assert mwd_graph_bounds(graph).state == from_dangling(path_graph(3))

    def test_rational(self):
        with pytest.raises(FieldModeError):
            mwd_graph_bounds(complete_graph(3, RAT))
