import pathlib

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rvclab.catalog import (
    connected_graphs,
    connected_graphs_upto,
    spider_net_free_graphs,
    spider_net_free_long_graphs,
)
from rvclab.graph import Graph

settings.register_profile(
    "rvclab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("rvclab")

CACHE_DIR = pathlib.Path(__file__).parent / ".g6cache"


@pytest.fixture(scope="session")
def cache_dir():
    return CACHE_DIR


@pytest.fixture(scope="session")
def catalog_upto_7():
    return connected_graphs_upto(7, CACHE_DIR)


@pytest.fixture(scope="session")
def catalog_upto_8():
    return connected_graphs_upto(8, CACHE_DIR)


@pytest.fixture(scope="session")
def catalog_8():
    return connected_graphs(8, CACHE_DIR)


@pytest.fixture(scope="session")
def free_s122n_upto_8():
    out = []
    for n in range(1, 9):
        out.extend(spider_net_free_graphs(n, CACHE_DIR))
    return out


@pytest.fixture(scope="session")
def free_s122n_long_upto_9():
    out = []
    for n in range(1, 10):
        out.extend(spider_net_free_long_graphs(n, CACHE_DIR))
    return out


@st.composite
def connected_graph_st(draw, min_n=1, max_n=8):
    """Random connected graph: a random tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    order = draw(st.permutations(list(range(n))))
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.append((order[i], order[j]))
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=2 * n,
        )
    )
    edges.extend((u, v) for u, v in extra if u != v)
    return Graph(n, edges)
