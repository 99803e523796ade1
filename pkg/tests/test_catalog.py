import networkx as nx
import pytest

from rvclab import families
from rvclab.catalog import (
    KNOWN_CONNECTED_COUNTS,
    _augment_free_long,
    _invariant,
    connected_graphs,
    spider_net_free_graphs,
    spider_net_free_long_graphs,
)
from rvclab.detect import find_induced, is_isomorphic
from rvclab.graph import diameter_and_path, is_connected


def test_counts_match_known_sequence(cache_dir):
    for n in range(1, 8):
        assert len(connected_graphs(n, cache_dir)) == KNOWN_CONNECTED_COUNTS[n]


def test_count_8(catalog_8):
    assert len(catalog_8) == KNOWN_CONNECTED_COUNTS[8]


def test_all_connected_and_distinct(cache_dir):
    graphs = connected_graphs(6, cache_dir)
    assert all(is_connected(g) for g in graphs)
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            assert not is_isomorphic(a, b)


def test_matches_atlas_counts(cache_dir):
    """Cross-check against an independent published enumeration."""
    from collections import Counter

    atlas_counts = Counter()
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() and nx.is_connected(g):
            atlas_counts[g.number_of_nodes()] += 1
    for n in range(1, 8):
        assert len(connected_graphs(n, cache_dir)) == atlas_counts[n]


def test_known_members_present(cache_dir):
    targets = [families.cycle(7), families.complete(7), families.spider(2, 2, 2)]
    graphs = connected_graphs(7, cache_dir)
    for target in targets:
        assert any(is_isomorphic(target, g) for g in graphs if g.m == target.m)


def test_free_catalog_is_free_subset(cache_dir):
    spider = families.spider(1, 2, 2)
    net = families.generalized_net(1, 1, 1)
    free7 = spider_net_free_graphs(7, cache_dir)
    all7 = connected_graphs(7, cache_dir)
    direct = [
        g for g in all7
        if find_induced(spider, g) is None and find_induced(net, g) is None
    ]
    assert len(free7) == len(direct)


def test_long_free_8_two_ways(cache_dir):
    """The pruned n=9 pipeline, run at n=8 where the direct filter is
    affordable, must reproduce the same isomorphism classes."""
    direct = spider_net_free_long_graphs(8, cache_dir)
    parents = [
        g for g in spider_net_free_graphs(7, cache_dir)
        if diameter_and_path(g)[0] >= 3
    ]
    via_augment = _augment_free_long(parents)
    assert len(via_augment) == len(direct)
    buckets = {}
    for g in direct:
        buckets.setdefault(_invariant(g.bits), []).append(g)
    for g in via_augment:
        assert any(
            is_isomorphic(g, other) for other in buckets.get(_invariant(g.bits), [])
        )


def test_long_free_9_contains_sampled_members(cache_dir):
    """Random in-family diameter>=4 graphs on 9 vertices must all appear."""
    from rvclab.sampler import sample_free_graphs

    long9 = spider_net_free_long_graphs(9, cache_dir)
    buckets = {}
    for g in long9:
        buckets.setdefault(_invariant(g.bits), []).append(g)
    found = 0
    for g in sample_free_graphs("s122-n", 60, n_min=9, n_max=9, seed=11):
        if diameter_and_path(g)[0] < 4:
            continue
        found += 1
        assert any(
            is_isomorphic(g, other) for other in buckets.get(_invariant(g.bits), [])
        )
    assert found >= 10


def test_long_free_9_properties(free_s122n_long_upto_9):
    spider = families.spider(1, 2, 2)
    net = families.generalized_net(1, 1, 1)
    for g in free_s122n_long_upto_9[::61]:
        assert is_connected(g)
        assert diameter_and_path(g)[0] >= 4
        assert find_induced(spider, g) is None
        assert find_induced(net, g) is None


def test_out_of_range_rejected(cache_dir):
    with pytest.raises(ValueError):
        connected_graphs(9, cache_dir)
    with pytest.raises(ValueError):
        spider_net_free_long_graphs(10, cache_dir)
