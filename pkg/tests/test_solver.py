import pytest
from hypothesis import given, settings, strategies as st

from trifree import solver
from trifree.extremal import generate_member
from trifree.plane_graph import GraphError, PlaneGraph, cycle_graph, path_graph
from trifree.verify import is_independent_set

import oracles


class TestExactAlpha:
    def test_c5(self):
        alpha, wit = solver.exact_alpha(cycle_graph(5))
        assert alpha == 2 and is_independent_set(cycle_graph(5), wit)

    def test_c5_ddagger(self, golden):
        alpha, _ = solver.exact_alpha(golden["c5_ddagger"])
        assert alpha == 4

    def test_cube(self, cube):
        alpha, wit = solver.exact_alpha(cube)
        assert alpha == 4 and len(wit) == 4

    def test_empty_graph(self):
        assert solver.exact_alpha(PlaneGraph({})) == (0, frozenset())

    def test_agrees_with_subset_oracle(self, corpus8):
        for g in corpus8[::3]:
            alpha, wit = solver.exact_alpha(g)
            assert alpha == oracles.naive_alpha(g)
            assert is_independent_set(g, wit) and len(wit) == alpha

    def test_size_limit(self):
        with pytest.raises(GraphError):
            solver.exact_alpha(cycle_graph(41))

    def test_deterministic_witness(self, golden):
        g = golden["member14"]
        assert solver.exact_alpha(g) == solver.exact_alpha(g)


class TestSolve:
    def test_c5(self):
        res = solver.solve(cycle_graph(5))
        assert res.size == 2 and res.guarantee == 2 and res.met

    def test_cube(self, cube):
        res = solver.solve(cube)
        assert res.size == 4 and res.guarantee == 4 and res.met

    def test_member20(self, golden):
        res = solver.solve(golden["member20"])
        assert res.size == 7 and res.met
        assert is_independent_set(golden["member20"], res.independent_set)

    def test_generated_member_five_steps(self):
        g = generate_member(5, 0)
        res = solver.solve(g)
        assert g.n == 20 and res.size == 7 and res.met

    def test_trace_below_base_is_empty(self):
        res = solver.solve(cycle_graph(5))
        assert res.trace == ()

    def test_trace_records_reductions(self, golden):
        res = solver.solve(golden["member14"])
        assert res.trace
        total_gain = sum(step.gain_k for step in res.trace)
        assert res.size >= total_gain

    def test_triangle_rejected(self):
        with pytest.raises(GraphError):
            solver.solve(PlaneGraph({1: (2, 3), 2: (3, 1), 3: (1, 2)}))

    def test_disconnected_components_summed(self):
        g = PlaneGraph({1: (2,), 2: (1,), 11: (12,), 12: (13, 11), 13: (12,)})
        res = solver.solve(g)
        assert res.size == 3  # one from the edge, two from the path
        assert res.guarantee == 3
        assert res.met

    def test_deterministic(self, golden):
        g = golden["member20"]
        assert solver.solve(g) == solver.solve(g)

    def test_met_on_corpus(self, corpus8):
        for g in corpus8:
            res = solver.solve(g)
            assert is_independent_set(g, res.independent_set)
            assert res.met, (g, res)

    def test_never_exceeds_alpha(self, corpus8):
        for g in corpus8[::5]:
            res = solver.solve(g)
            alpha, _ = solver.exact_alpha(g)
            assert res.size <= alpha

    @settings(max_examples=10, deadline=None)
    @given(steps=st.integers(0, 6), seed=st.integers(0, 30))
    def test_members_attain_extremal_size(self, steps, seed):
        g = generate_member(steps, seed)
        res = solver.solve(g)
        assert 3 * res.size == g.n + 1
        assert res.met


class TestCheckTheoremBounds:
    def test_c5(self):
        rep = solver.check_theorem_bounds(cycle_graph(5))
        assert rep.alpha == 2 and rep.member and rep.ok

    def test_c5_dagger(self, golden):
        rep = solver.check_theorem_bounds(golden["c5_dagger"])
        assert rep.alpha == 3 and rep.member and rep.ok

    def test_cube(self, cube):
        rep = solver.check_theorem_bounds(cube)
        assert rep.alpha == 4 and not rep.member and rep.ok

    def test_corpus_no_violations(self, corpus8):
        for g in corpus8:
            assert solver.check_theorem_bounds(g).ok

    def test_path_graphs(self):
        for k in (1, 2, 3, 4, 7):
            assert solver.check_theorem_bounds(path_graph(k)).ok
