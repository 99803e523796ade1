import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graph_st
from oracles import (
    rainbow_pair_bruteforce,
    rainbow_pair_exhaustive,
    rainbow_verdict_bruteforce,
)
from rvclab import families
from rvclab.graph import DisconnectedGraphError, Graph, diameter_and_path, is_connected
from rvclab.rvc import (
    ColoringMismatchError,
    SearchBudgetError,
    VertexColoring,
    cycle_rvc,
    halved_cycle_coloring,
    is_rainbow_vertex_connected,
    rvc_exact,
    stored_cycle_witness,
    vertex_rainbow_path,
)


class TestVertexColoring:
    def test_valid(self):
        VertexColoring((0, 1, 0), 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            VertexColoring((0, 2), 2)

    def test_zero_palette_must_be_all_zero(self):
        VertexColoring((0, 0), 0)
        with pytest.raises(ValueError):
            VertexColoring((0, 1), 0)


class TestVerifier:
    def test_complete_single_color(self):
        report = is_rainbow_vertex_connected(families.complete(4), VertexColoring((0,) * 4, 1))
        assert report.connected and report.failing_pair is None

    def test_path_single_color_fails_at_ends(self):
        report = is_rainbow_vertex_connected(families.path(4), VertexColoring((0,) * 4, 1))
        assert not report.connected
        assert report.failing_pair == (0, 3)

    def test_solver_witness_verifies(self):
        result = rvc_exact(families.cycle(9))
        assert is_rainbow_vertex_connected(families.cycle(9), result.witness).connected
        verdict, _ = rainbow_verdict_bruteforce(families.cycle(9), result.witness.colors)
        assert verdict

    def test_length_mismatch(self):
        with pytest.raises(ColoringMismatchError):
            is_rainbow_vertex_connected(families.path(3), VertexColoring((0, 0), 1))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            is_rainbow_vertex_connected(Graph(3, [(0, 1)]), VertexColoring((0,) * 3, 1))

    @given(connected_graph_st(min_n=2, max_n=7), st.data())
    def test_agrees_with_path_oracle(self, g, data):
        k = data.draw(st.integers(1, 4))
        colors = tuple(data.draw(st.integers(0, k - 1)) for _ in range(g.n))
        coloring = VertexColoring(colors, k)
        report = is_rainbow_vertex_connected(g, coloring)
        verdict, pair = rainbow_verdict_bruteforce(g, colors)
        assert report.connected == verdict
        assert report.failing_pair == pair

    @given(connected_graph_st(min_n=2, max_n=7), st.data())
    def test_degree_one_recoloring_irrelevant(self, g, data):
        """Leaves are never internal, so recoloring them changes nothing."""
        k = data.draw(st.integers(2, 4))
        colors = [data.draw(st.integers(0, k - 1)) for _ in range(g.n)]
        before = is_rainbow_vertex_connected(g, VertexColoring(tuple(colors), k)).connected
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        if not leaves:
            return
        for v in leaves:
            colors[v] = data.draw(st.integers(0, k - 1))
        after = is_rainbow_vertex_connected(g, VertexColoring(tuple(colors), k)).connected
        assert before == after


def test_pruned_oracle_matches_exhaustive_oracle():
    """The pruned simple-path oracle equals full path enumeration."""
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randint(2, 5)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
        g = Graph(n, edges)
        colors = [rng.randrange(3) for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                assert rainbow_pair_bruteforce(g, colors, u, v) == rainbow_pair_exhaustive(
                    g, colors, u, v
                )


class TestWitnessPath:
    def test_returns_rainbow_path(self):
        g = families.cycle(9)
        coloring = rvc_exact(g).witness
        path = vertex_rainbow_path(g, coloring, 0, 4)
        assert path[0] == 0 and path[-1] == 4
        internal = [coloring.colors[v] for v in path[1:-1]]
        assert len(set(internal)) == len(internal)
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)

    def test_none_when_unreachable(self):
        g = families.path(4)
        assert vertex_rainbow_path(g, VertexColoring((0,) * 4, 1), 0, 3) is None


class TestExact:
    def test_complete_convention(self):
        result = rvc_exact(families.complete(6))
        assert result.value == 0 and result.witness is None and result.exhaustive

    def test_tiny_graphs_are_complete(self):
        assert rvc_exact(Graph(1)).value == 0
        assert rvc_exact(families.path(2)).value == 0

    def test_cycle9(self):
        result = rvc_exact(families.cycle(9))
        assert result.value == 3 and result.exhaustive
        assert result.witness.k == 3

    def test_path6(self):
        assert rvc_exact(families.path(6)).value == 4

    def test_matches_cycle_formula_small(self):
        for n in range(3, 9):
            assert rvc_exact(families.cycle(n)).value == cycle_rvc(n)

    def test_budget_guard(self):
        with pytest.raises(SearchBudgetError):
            rvc_exact(families.cycle(17))

    def test_max_palette_exceeded_is_loud(self):
        with pytest.raises(SearchBudgetError):
            rvc_exact(families.path(6), max_palette=2)

    def test_witness_minimality_on_sample(self, catalog_upto_7):
        rng = random.Random(1)
        for g in rng.sample(catalog_upto_7, 40):
            result = rvc_exact(g)
            if result.value == 0:
                assert g.is_complete()
                continue
            assert is_rainbow_vertex_connected(g, result.witness).connected
            assert result.witness.k == result.value
            d, _ = diameter_and_path(g)
            assert max(1, d - 1) <= result.value <= g.n - 2 or g.n < 3


class TestCycleFormula:
    def test_table(self):
        expected = {3: 0, 4: 1, 5: 1, 6: 2, 7: 3, 8: 3, 9: 3, 10: 4, 11: 5,
                    12: 5, 13: 6, 14: 7, 15: 7, 16: 8, 17: 9, 20: 10}
        for n, value in expected.items():
            assert cycle_rvc(n) == value

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            cycle_rvc(2)


class TestHalvedColoring:
    def test_eight(self):
        c = halved_cycle_coloring(8)
        assert c.colors == (0, 1, 2, 3, 0, 1, 2, 3) and c.k == 4

    def test_sixteen_is_optimal(self):
        c = halved_cycle_coloring(16)
        assert c.k == 8 == cycle_rvc(16)
        assert is_rainbow_vertex_connected(families.cycle(16), c).connected

    def test_three(self):
        c = halved_cycle_coloring(3)
        assert c.k == 2
        assert is_rainbow_vertex_connected(families.cycle(3), c).connected

    @pytest.mark.parametrize("k", range(3, 22))
    def test_always_verifies(self, k):
        assert is_rainbow_vertex_connected(families.cycle(k), halved_cycle_coloring(k)).connected


class TestStoredWitnesses:
    @pytest.mark.parametrize("n", [13, 15])
    def test_verify_at_formula_value(self, n):
        w = stored_cycle_witness(n)
        assert w.k == cycle_rvc(n)
        assert is_rainbow_vertex_connected(families.cycle(n), w).connected

    def test_missing_is_keyerror(self):
        with pytest.raises(KeyError):
            stored_cycle_witness(11)
