import random

import pytest

from rvclab import families
from rvclab.colorers import (
    FamilyPreconditionError,
    _escalate,
    build_escape_cycle,
    color_p4_free,
    color_p5_kth_free,
    color_s122_n_free,
)
from rvclab.detect import find_induced
from rvclab.graph import Graph, diameter_and_path
from rvclab.rvc import is_rainbow_vertex_connected, rvc_exact
from rvclab.structure import classify_against_path


class TestP4Free:
    def test_complete(self):
        cc = color_p4_free(families.complete(5))
        assert cc.palette == 0 and cc.verified and cc.case_trace == "complete"

    def test_c4(self):
        cc = color_p4_free(families.cycle(4))
        assert cc.palette == 1 and cc.verified
        assert cc.bound_claimed == 1  # diameter 2 forces exactly one color
        assert rvc_exact(families.cycle(4)).value == 1

    def test_star(self):
        cc = color_p4_free(families.star(6))
        assert cc.palette == 1 and cc.verified

    def test_rejects_p4(self):
        with pytest.raises(FamilyPreconditionError):
            color_p4_free(families.path(5))

    def test_rejects_disconnected(self):
        with pytest.raises(FamilyPreconditionError):
            color_p4_free(Graph(3, [(0, 1)]))


class TestP5PendantCompleteFree:
    def test_complete_uses_clique_case(self):
        cc = color_p5_kth_free(families.complete(7), 4)
        assert cc.case_trace == "dominating-clique"
        assert cc.palette <= 2 and cc.verified and cc.escalation == "none"

    def test_c5_uses_dominating_path(self):
        cc = color_p5_kth_free(families.cycle(5), 4)
        assert cc.case_trace == "dominating-p3"
        assert cc.palette == 3 and cc.verified
        assert rvc_exact(families.cycle(5)).value == 1 <= cc.palette

    def test_pendant_complete_host(self):
        g = families.pendant_complete(5)
        cc = color_p5_kth_free(g, 6)
        assert cc.case_trace.startswith("dominating-clique")
        assert cc.palette <= 7 and cc.verified
        assert rvc_exact(g).value == 5 <= cc.palette

    def test_matching_order_fallback(self):
        """Graph engineered so naive matching orders strand two leftover
        vertices on same-colored clique neighbors."""
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2), (4, 1), (5, 2)])
        cc = color_p5_kth_free(g, 4)
        assert cc.verified and cc.escalation == "none"

    def test_rejects_p5(self):
        with pytest.raises(FamilyPreconditionError):
            color_p5_kth_free(families.path(6), 4)

    def test_rejects_pendant_complete_pattern(self):
        with pytest.raises(FamilyPreconditionError):
            color_p5_kth_free(families.pendant_complete(4), 4)

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            color_p5_kth_free(families.complete(3), 3)


class TestSpiderNetFree:
    def test_c7_short_diameter_partition(self):
        cc = color_s122_n_free(families.cycle(7))
        assert cc.case_trace == "partition-d3"
        assert cc.palette <= 14 and cc.verified and cc.escalation == "none"
        assert rvc_exact(families.cycle(7)).value == 3

    def test_c12_escape_cycle(self):
        cc = color_s122_n_free(families.cycle(12))
        assert cc.case_trace == "escape-cycle"
        assert cc.palette == 6 <= 7  # halved coloring of the whole cycle
        assert cc.verified and cc.escalation == "none"

    def test_p9_barrier_cut(self):
        cc = color_s122_n_free(families.path(9))
        d = 8
        assert cc.case_trace == "barrier-cut"
        assert cc.palette <= d + 7 and cc.verified
        assert rvc_exact(families.path(9)).value == 7

    def test_complete(self):
        cc = color_s122_n_free(families.complete(6))
        assert cc.palette == 0 and cc.case_trace == "diam<=2"

    def test_rejects_spider(self):
        with pytest.raises(FamilyPreconditionError):
            color_s122_n_free(families.spider(1, 2, 2))

    def test_rejects_net(self):
        with pytest.raises(FamilyPreconditionError):
            color_s122_n_free(families.generalized_net(2, 2, 2))


class TestEscapeCycle:
    def test_cycle12_escape_is_whole_cycle(self):
        g = families.cycle(12)
        part = classify_against_path(g, tuple(range(7)))
        cyc = build_escape_cycle(g, part)
        assert cyc is not None
        assert sorted(cyc.cycle) == list(range(12))
        assert cyc.return_arc_len == 6
        assert cyc.chordless and cyc.dominating

    def test_path_barrier_separates(self):
        g = families.path(9)
        part = classify_against_path(g, tuple(range(9)))
        assert build_escape_cycle(g, part) is None

    def test_blown_up_cycle_dominated(self):
        # triangle inflation at one spot of a 10-cycle
        edges = [(i, (i + 1) % 10) for i in range(10)]
        edges += [(10, 0), (10, 1)]
        g = Graph(11, edges)
        d, path = diameter_and_path(g)
        assert d == 5
        part = classify_against_path(g, path)
        cyc = build_escape_cycle(g, part)
        assert cyc is not None and cyc.chordless
        assert cyc.dominating
        assert len(cyc.cycle) >= 2 * d - 2


class TestEscalation:
    def test_exact_fallback_is_verified(self):
        g = families.cycle(9)
        cc = _escalate(g, "escape-cycle", "forced-by-test", bound=15)
        assert cc.escalation == "exact-fallback"
        assert cc.case_trace == "escape-cycle/exact-fallback(forced-by-test)"
        assert cc.verified
        assert is_rainbow_vertex_connected(g, cc.coloring).connected
        assert cc.palette == rvc_exact(g).value


def test_constructive_palettes_bound_exact_values(free_s122n_upto_8):
    rng = random.Random(3)
    sample = rng.sample(free_s122n_upto_8, 60)
    for g in sample:
        cc = color_s122_n_free(g)
        exact = rvc_exact(g).value
        assert exact <= cc.palette or (exact == 0 and cc.palette == 0)


def test_escape_cycle_claims_hold(free_s122n_long_upto_9):
    """Chordlessness, bounded return arc and double domination of the
    escape cycle on every precondition-satisfying input that reaches it.

    Catalog graphs up to 9 vertices are all barrier-separated at diameter
    5 and above (an escape cycle needs at least 2d-2 cycle vertices), so
    sampled family members provide the non-vacuous cases.
    """
    from rvclab.sampler import sample_free_graphs

    hosts = list(free_s122n_long_upto_9) + sample_free_graphs(
        "s122-n", 80, n_min=10, n_max=20, seed=2024
    )
    checked = 0
    for g in hosts:
        d, path = diameter_and_path(g)
        if d < 5:
            continue
        part = classify_against_path(g, path)
        cyc = build_escape_cycle(g, part)
        if cyc is None:
            continue
        checked += 1
        assert cyc.chordless
        assert cyc.return_arc_len <= d + 2
        assert cyc.dominating
        # strengthened form: two differently colored cycle neighbors
        k = len(cyc.cycle)
        h = (k + 1) // 2
        color = {v: (i if i < h else i - h) for i, v in enumerate(cyc.cycle)}
        on_cycle = set(cyc.cycle)
        for z in range(g.n):
            if z in on_cycle:
                continue
            seen = {color[w] for w in g.neighbors(z) if w in on_cycle}
            assert len(seen) >= 2
    assert checked > 0
