import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

import sparseclique as sc
from sparseclique import (
    InteractionRecords,
    build_cooccurrence_graph,
    detect_communities,
    threshold_filter,
)
from sparseclique.errors import FormatError


def records(*pairs):
    return InteractionRecords(pairs=list(pairs))


class TestJaccard:
    def test_half_overlap(self):
        wg = build_cooccurrence_graph(
            records(("A", "1"), ("A", "2"), ("A", "3"), ("B", "2"), ("B", "3"), ("B", "4"))
        )
        assert wg.labels == ["A", "B"]
        assert wg.weights == {(0, 1): pytest.approx(0.5, abs=1e-12)}

    def test_identical_user_sets(self):
        wg = build_cooccurrence_graph(records(("A", "1"), ("B", "1")))
        assert wg.weights[(0, 1)] == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_user_sets(self):
        wg = build_cooccurrence_graph(records(("A", "1"), ("B", "2")))
        assert wg.weights == {}
        assert wg.graph.m == 0

    def test_duplicate_records_do_not_skew(self):
        wg = build_cooccurrence_graph(records(("A", "1"), ("A", "1"), ("B", "1")))
        assert wg.weights[(0, 1)] == pytest.approx(1.0, abs=1e-12)

    def test_weights_in_unit_interval(self):
        pairs = [(f"w{i % 5}", f"u{(i * 7) % 11}") for i in range(40)]
        wg = build_cooccurrence_graph(records(*pairs))
        assert all(0.0 < w <= 1.0 for w in wg.weights.values())

    def test_empty_records_rejected(self):
        with pytest.raises(ValueError):
            build_cooccurrence_graph(records())


class TestThreshold:
    def fixture_graph(self):
        wg = build_cooccurrence_graph(
            records(
                ("A", "1"), ("A", "2"),          # A: {1,2}
                ("B", "2"), ("B", "3"), ("B", "4"),  # B: {2,3,4}  w(A,B)=1/4
                ("C", "3"), ("C", "4"),          # C: {3,4}    w(B,C)=2/3
            )
        )
        return wg

    def test_strictly_above(self):
        wg = self.fixture_graph()
        kept = threshold_filter(wg, 0.3)
        assert kept.m == 1  # only the 2/3 edge survives

    def test_zero_keeps_all_positive(self):
        wg = self.fixture_graph()
        assert threshold_filter(wg, 0.0).m == len(wg.weights)

    def test_one_drops_everything(self):
        wg = self.fixture_graph()
        assert threshold_filter(wg, 1.0).m == 0

    def test_tie_is_dropped(self):
        wg = self.fixture_graph()
        assert threshold_filter(wg, 2 / 3).m == 0

    @given(st.floats(min_value=0, max_value=1, allow_nan=False))
    def test_monotone_edge_nesting(self, t):
        wg = self.fixture_graph()
        lower = threshold_filter(wg, t / 2)
        higher = threshold_filter(wg, t)
        low_edges = {tuple(e) for e in lower.edge_pairs()}
        high_edges = {tuple(e) for e in higher.edge_pairs()}
        assert high_edges <= low_edges


class TestDetect:
    def test_two_triangles_sharing_a_vertex(self):
        g = sc.Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        communities = detect_communities(g)
        assert communities == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}

    def test_k4_single_community(self):
        k4 = sc.Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert detect_communities(k4) == {frozenset({0, 1, 2, 3})}

    def test_edgeless_graph_empty(self):
        assert detect_communities(sc.Graph.from_edges(4, [])) == set()

    def test_every_non_isolated_vertex_covered(self):
        g = sc.Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (5, 6), (2, 3)])
        communities = detect_communities(g)
        covered = set().union(*communities)
        non_isolated = {v for v in range(g.n) if g.degree(v)}
        assert non_isolated <= covered
        for c in communities:
            assert sc.verify_clique(g, c)

    def test_subset_communities_dropped(self):
        # triangle {0,1,2} plus pendant 3 attached to 0 and 1: the pendant's
        # own clique {0,1,3} is kept, but no 2-subsets survive
        g = sc.Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        communities = detect_communities(g)
        assert frozenset({0, 1, 2}) in communities
        assert all(len(c) == 3 for c in communities)


class TestRecordsParsing:
    def test_from_stream(self):
        text = "# wall user\nA 1\nA 2\nB 2\n"
        rec = InteractionRecords.from_stream(io.StringIO(text))
        assert rec.pairs == [("A", "1"), ("A", "2"), ("B", "2")]

    def test_malformed_line(self):
        with pytest.raises(FormatError, match="line 2"):
            InteractionRecords.from_stream(io.StringIO("A 1\nB\n"))
