import statistics

import pytest
from hypothesis import given

import sparseclique as sc
from sparseclique import SelectionPolicy, instances

from .test_graph import raw_edge_lists

SMALL_SUITE = ["hamming6-4", "hamming6-2", "johnson8-4-4", "c-fat200-1", "keller4"]


def test_complete_graph_is_exact(k3):
    r = sc.max_clique_heuristic(k3)
    assert r.size == 3 and r.witness == (0, 1, 2)
    assert r.algorithm == "heuristic" and r.policy == "maxdeg"


def test_no_order_or_bound_counters(load_instance):
    r = sc.max_clique_heuristic(load_instance("keller4"))
    assert r.stats.p2 == 0 and r.stats.p4 == 0


@given(raw_edge_lists())
def test_soundness_against_exact(raw):
    g = sc.normalize(raw)
    heur = sc.max_clique_heuristic(g)
    assert heur.size <= sc.max_clique(g).size
    if heur.size:
        assert sc.verify_clique(g, heur.witness)
        assert len(heur.witness) == heur.size


def test_deterministic_per_policy(load_instance):
    g = load_instance("keller4")
    a = sc.max_clique_heuristic(g)
    b = sc.max_clique_heuristic(g)
    assert (a.size, a.witness) == (b.size, b.witness)
    ra = sc.max_clique_heuristic(g, SelectionPolicy.uniform_random(99))
    rb = sc.max_clique_heuristic(g, SelectionPolicy.uniform_random(99))
    assert (ra.size, ra.witness) == (rb.size, rb.witness)
    assert ra.policy == "random" and ra.seed == 99


def test_policy_validation():
    with pytest.raises(ValueError):
        SelectionPolicy(kind="best")
    with pytest.raises(ValueError):
        sc.max_clique_heuristic(sc.Graph.from_edges(1, []), threads=0)


def test_threaded_run_is_sound(load_instance):
    g = load_instance("keller4")
    r = sc.max_clique_heuristic(g, threads=3)
    assert sc.verify_clique(g, r.witness)
    assert 1 <= r.size <= 11


def test_max_degree_beats_median_random(load_instance):
    # quality comparison: max-degree selection should match the known
    # optimum at least as often as the median random-selection run
    exact_hits_maxdeg = 0
    random_hits = []
    for name in SMALL_SUITE:
        g = load_instance(name)
        omega = instances.info(name).omega
        exact_hits_maxdeg += sc.max_clique_heuristic(g).size == omega
    for seed in range(10):
        hits = 0
        for name in SMALL_SUITE:
            g = load_instance(name)
            omega = instances.info(name).omega
            hits += sc.max_clique_heuristic(g, SelectionPolicy.uniform_random(seed)).size == omega
        random_hits.append(hits)
    assert exact_hits_maxdeg >= statistics.median(random_hits)


class TestPerVertex:
    def test_triangle(self, k3):
        assert sc.largest_clique_per_vertex(k3) == {0: (0, 1, 2), 1: (0, 1, 2), 2: (0, 1, 2)}

    def test_path(self, path4):
        result = sc.largest_clique_per_vertex(path4)
        assert set(result) == {0, 1, 2, 3}
        for v, clique in result.items():
            assert v in clique and len(clique) == 2
            assert sc.verify_clique(path4, clique)

    def test_star(self):
        star = sc.Graph.from_edges(5, [(0, v) for v in range(1, 5)])
        result = sc.largest_clique_per_vertex(star)
        assert all(len(c) == 2 and v in c for v, c in result.items())

    @given(raw_edge_lists())
    def test_every_vertex_covered_and_verified(self, raw):
        g = sc.normalize(raw)
        result = sc.largest_clique_per_vertex(g)
        assert set(result) == set(range(g.n))
        for v, clique in result.items():
            assert v in clique
            assert sc.verify_clique(g, clique)

    def test_threads_partition_matches(self, load_instance):
        g = load_instance("c-fat200-1")
        assert sc.largest_clique_per_vertex(g) == sc.largest_clique_per_vertex(g, threads=3)


def test_per_vertex_wire_format(path4):
    # interior vertices pair with their degree-2 neighbor, ends with their only one
    lines = list(sc.per_vertex_lines(sc.largest_clique_per_vertex(path4)))
    assert lines == ["0: 0 1", "1: 1 2", "2: 1 2", "3: 2 3"]


def test_near_optimal_on_dense_file_instance(load_instance):
    # known hard case where max-degree selection lands within a few vertices
    # of the clique number (126); needs the original benchmark file
    g = load_instance("MANN_a27")
    r = sc.max_clique_heuristic(g)
    assert r.size >= 105  # >= 0.83 * 126
    assert sc.verify_clique(g, r.witness)


class TestScalingProbe:
    def test_empty_graph_row(self):
        row = sc.heuristic_scaling_probe(sc.Graph.from_edges(0, []))
        assert (row.n, row.m, row.max_degree) == (0, 0, 0)

    def test_single_edge_below_resolution(self):
        row = sc.heuristic_scaling_probe(sc.Graph.from_edges(2, [(0, 1)]))
        assert row.elapsed < 0.5
        assert row.csv_row().startswith("2,1,1,")

    def test_growth_subquadratic_on_uniform_series(self):
        # log-log slope of heuristic time against edge count stays well
        # below quadratic over a doubling series of uniform random graphs
        import numpy as np

        from sparseclique.rmat import family_params, generate_rmat

        ms, times = [], []
        for scale in range(17, 22):
            g = generate_rmat(family_params("er", scale, seed=3))
            row = sc.heuristic_scaling_probe(g)
            ms.append(row.m)
            times.append(max(row.elapsed, 1e-4))
        slope = np.polyfit(np.log(ms), np.log(times), 1)[0]
        assert slope <= 1.5
