import pytest
from hypothesis import given
from hypothesis import strategies as st

import sparseclique as sc
from sparseclique import Ordering, SolverConfig, instances

from .conftest import random_graph
from .test_graph import raw_edge_lists


def test_k3(k3):
    r = sc.max_clique(k3)
    assert r.size == 3
    assert r.witness == (0, 1, 2)
    assert r.exact and not r.lb_unverified


def test_path4(path4):
    assert sc.max_clique(path4).size == 2


def test_empty_and_isolated():
    assert sc.max_clique(sc.Graph.from_edges(0, [])).size == 0
    r = sc.max_clique(sc.Graph.from_edges(5, []))
    assert r.size == 1 and len(r.witness) == 1


def test_k5_recursion_reaches_full_depth():
    k5 = sc.Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    r = sc.max_clique(k5)
    assert r.size == 5
    assert r.witness == (0, 1, 2, 3, 4)


def test_bound_cut_is_counted():
    # K4: after the first descent sets the incumbent to 4, the remaining
    # candidates cannot beat it and the backtrack counter must fire.
    k4 = sc.Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    r = sc.max_clique(k4)
    assert r.size == 4
    assert r.stats.p4 >= 1


def test_counters_deterministic_single_thread(load_instance):
    g = load_instance("hamming6-4")
    a = sc.max_clique(g)
    b = sc.max_clique(g)
    assert a.stats == b.stats and a.size == b.size and a.witness == b.witness


def test_johnson_pruning_profile(load_instance):
    r = sc.max_clique(load_instance("johnson8-4-4"))
    assert r.size == 14
    assert (r.stats.p1, r.stats.p2, r.stats.p3, r.stats.p5) == (0, 1855, 0, 0)


@pytest.mark.parametrize("seed", range(4))
def test_oracle_equivalence_small_graphs(seed):
    for n in (6, 10, 14, 18):
        for p in (0.2, 0.5, 0.8):
            g = random_graph(n, p, seed * 1000 + n * 10 + int(p * 10))
            assert sc.max_clique(g).size == sc.brute_force(g)


@given(raw_edge_lists())
def test_witness_soundness(raw):
    g = sc.normalize(raw)
    r = sc.max_clique(g)
    assert r.exact
    assert r.witness is not None
    assert len(r.witness) == r.size
    assert sc.verify_clique(g, r.witness)


@given(raw_edge_lists())
def test_ordering_independence(raw):
    g = sc.normalize(raw)
    natural = sc.max_clique(g, SolverConfig(ordering=Ordering.NATURAL))
    by_degree = sc.max_clique(g, SolverConfig(ordering=Ordering.DEGREE_DESC))
    assert natural.size == by_degree.size


@given(raw_edge_lists(), st.integers(min_value=0, max_value=3))
def test_lb_monotonicity(raw, delta):
    g = sc.normalize(raw)
    omega = sc.max_clique(g).size
    lb = max(0, omega - delta)
    r = sc.max_clique(g, SolverConfig(lb=lb))
    assert r.size == omega


def test_lb_above_true_maximum_is_flagged(k3):
    r = sc.max_clique(k3, SolverConfig(lb=10))
    assert r.size == 10 and r.witness is None and r.lb_unverified and r.exact


def test_time_limit_returns_best_so_far():
    # The reconstructed c-fat200-5 is deliberately search-hostile, which
    # makes it a convenient instance that cannot finish in a fraction of a
    # second but finds its best clique almost immediately.
    g = instances.generate("c-fat200-5")
    r = sc.max_clique(g, SolverConfig(time_limit=0.3))
    assert not r.exact
    assert r.size >= 2
    assert sc.verify_clique(g, r.witness)


def test_threads_match_single_thread_size(load_instance):
    g = load_instance("keller4")
    assert sc.max_clique(g, SolverConfig(threads=2)).size == 11


def test_threads_with_time_limit_cooperate():
    g = instances.generate("c-fat200-5")
    r = sc.max_clique(g, SolverConfig(threads=2, time_limit=0.3))
    assert not r.exact
    assert sc.verify_clique(g, r.witness or ())


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(lb=-1)
    with pytest.raises(ValueError):
        SolverConfig(threads=0)
    with pytest.raises(ValueError):
        SolverConfig(time_limit=0)


def test_verify_clique(k3, path4):
    assert sc.verify_clique(k3, [0, 1, 2])
    assert not sc.verify_clique(path4, [0, 2])
    assert sc.verify_clique(k3, [])
    with pytest.raises(IndexError):
        sc.verify_clique(k3, [5])
