from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollbei.errors import NotClosedError, PreconditionError, SizeLimitError
from scrollbei.graphs import (
    LabeledGraph,
    clique_intervals,
    closedness_violation,
    connected_components,
    enumerate_graphs,
    find_closed_labeling,
    find_closed_labeling_bruteforce,
    has_interval_cliques,
    is_closed_labeling,
    is_connected,
    maximal_cliques,
)
from scrollbei.suites import FIGURE_2A, FIGURE_2B, FINAL_EXAMPLE

CLOSED_COUNTS = [1, 2, 6, 23, 105, 552, 3276, 21632]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_graph_validation():
    with pytest.raises(ValueError):
        LabeledGraph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        LabeledGraph(3, frozenset({(1, 4)}))


class TestClosedness:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_path_and_complete(self, n):
        assert is_closed_labeling(LabeledGraph.path(n))
        assert is_closed_labeling(LabeledGraph.complete(n))

    def test_figure_2(self):
        assert not is_closed_labeling(FIGURE_2A)
        assert closedness_violation(FIGURE_2A) is not None
        assert not is_closed_labeling(FIGURE_2B)

    def test_final_example(self):
        assert is_closed_labeling(FINAL_EXAMPLE)


class TestComponentsAndCliques:
    def test_components(self):
        assert connected_components(LabeledGraph.path(5)).count == 1
        assert connected_components(LabeledGraph.empty(4)).count == 4
        two = LabeledGraph.from_cliques([(1, 3), (4, 6)])
        assert connected_components(two).blocks == ((1, 2, 3), (4, 5, 6))

    def test_cliques(self):
        assert maximal_cliques(LabeledGraph.complete(5)) == [(1, 2, 3, 4, 5)]
        assert maximal_cliques(LabeledGraph.path(4)) == [(1, 2), (2, 3), (3, 4)]
        assert maximal_cliques(FINAL_EXAMPLE) == [(1, 2, 3, 4), (3, 4, 5), (4, 5, 6)]

    def test_intervals(self):
        assert clique_intervals(FINAL_EXAMPLE).intervals == ((1, 4), (3, 5), (4, 6))
        assert clique_intervals(LabeledGraph.complete(5)).intervals == ((1, 5),)
        assert clique_intervals(LabeledGraph.path(4)).intervals == ((1, 2), (2, 3), (3, 4))
        assert clique_intervals(FINAL_EXAMPLE).r == 3

    def test_intervals_errors(self):
        with pytest.raises(NotClosedError):
            clique_intervals(FIGURE_2A)
        # closed by the local definition, but its cliques {1,3}, {2,4} are not intervals
        interleaved = LabeledGraph(4, frozenset({(1, 3), (2, 4)}))
        assert is_closed_labeling(interleaved)
        assert not has_interval_cliques(interleaved)
        with pytest.raises(PreconditionError):
            clique_intervals(interleaved)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_connected_closed_have_interval_cliques(self, n):
        for G in enumerate_graphs(n, "connected-closed"):
            assert has_interval_cliques(G)


class TestLabelingSearch:
    def test_complete_is_identity(self):
        assert find_closed_labeling(LabeledGraph.complete(5)) == (1, 2, 3, 4, 5)

    def test_double_star_has_none(self):
        assert find_closed_labeling(FIGURE_2A) is None
        assert find_closed_labeling_bruteforce(FIGURE_2A) is None

    @given(st.permutations(range(1, 7)))
    def test_scrambled_path(self, perm):
        G = LabeledGraph.path(6).relabel(perm)
        found = find_closed_labeling(G)
        assert found is not None and is_closed_labeling(G.relabel(found))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_agrees_with_bruteforce(self, n):
        for G in enumerate_graphs(n):
            fast, slow = find_closed_labeling(G), find_closed_labeling_bruteforce(G)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert is_closed_labeling(G.relabel(fast))

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            find_closed_labeling(LabeledGraph.path(9))


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_all_counts(self, n):
        assert sum(1 for _ in enumerate_graphs(n)) == 2 ** comb(n, 2)

    def test_small(self):
        assert len(list(enumerate_graphs(3))) == 8
        assert len(list(enumerate_graphs(2))) == 2
        cc = set(enumerate_graphs(3, "connected-closed"))
        assert LabeledGraph.path(3) in cc and LabeledGraph.complete(3) in cc

    @pytest.mark.parametrize("n", range(1, 8))
    def test_closed_counts(self, n):
        closed = list(enumerate_graphs(n, "closed"))
        assert len(closed) == CLOSED_COUNTS[n - 1]
        assert sum(is_connected(G) for G in closed) == CATALAN[n - 1]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_closed_filter_matches_definition(self, n):
        direct = [G for G in enumerate_graphs(n) if is_closed_labeling(G)]
        assert direct == list(enumerate_graphs(n, "closed"))

    def test_masks_increase(self):
        masks = [G.mask() for G in enumerate_graphs(6, "closed")]
        assert masks == sorted(masks)

    def test_caps(self):
        with pytest.raises(SizeLimitError):
            next(enumerate_graphs(8))
        with pytest.raises(ValueError):
            next(enumerate_graphs(3, "bogus"))
