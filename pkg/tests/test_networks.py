"""Tests for self-similar trees built by the leaf algorithms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topocode.errors import PreconditionError, SizeLimitError
from topocode.graph import cycle, is_tree, isomorphic, path, star
from topocode.networks import (
    SelfSimilarSpec,
    leaf_algo_a,
    leaf_algo_b,
    leaf_algo_c,
    self_similar_order,
)

from utils.strategies import trees


# =============================================================================
# Closed form
# =============================================================================


@pytest.mark.parametrize("v, m, t, expected", [(3, 1, 1, 4), (3, 1, 3, 6), (4, 2, 1, 8), (4, 2, 2, 16), (3, 2, 1, 5), (3, 2, 2, 9)])
def test_self_similar_order(v, m, t, expected):
    assert self_similar_order(v, m, t) == expected


@given(st.integers(3, 12), st.integers(1, 5), st.integers(1, 5))
def test_order_recurrence(v, m, t):
    previous = v if t == 1 else self_similar_order(v, m, t - 1)
    assert self_similar_order(v, m, t) == v - 2 * m + m * previous


# =============================================================================
# Algorithm A
# =============================================================================


class TestAlgorithmA:
    def test_path_grows_by_one(self):
        tree, counts = leaf_algo_a(SelfSimilarSpec(path(3), 1, root=0))
        assert tree.edges == ((0, 1), (1, 2), (2, 3))
        assert counts.matches_closed_form

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_path_iterations(self, t):
        tree, _ = leaf_algo_a(SelfSimilarSpec(path(3), t, root=0))
        assert isomorphic(tree, path(3 + t))

    def test_star_rooted_at_leaf(self):
        tree, counts = leaf_algo_a(SelfSimilarSpec(star(3), 1, root=1))
        assert (counts.vertices, counts.edges) == (8, 7)
        assert counts.matches_closed_form
        assert is_tree(tree)

    def test_needs_root(self):
        with pytest.raises(PreconditionError):
            leaf_algo_a(SelfSimilarSpec(path(3)))

    @settings(max_examples=40, deadline=None)
    @given(trees(min_vertices=3, max_vertices=6), st.integers(1, 2), st.data())
    def test_closed_form_on_random_trees(self, base, t, data):
        root = data.draw(st.sampled_from(list(base.vertices)))
        tree, counts = leaf_algo_a(SelfSimilarSpec(base, t, root=root))
        assert counts.matches_closed_form
        assert is_tree(tree)


# =============================================================================
# Algorithms B and C
# =============================================================================


class TestAlgorithmB:
    def test_small_star(self):
        tree, counts = leaf_algo_b(SelfSimilarSpec(star(2), 1))
        assert counts.vertices == 5
        assert counts.matches_closed_form
        assert isomorphic(tree, star(4))

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_closed_form(self, t):
        _, counts = leaf_algo_b(SelfSimilarSpec(star(2), t))
        assert counts.matches_closed_form

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            leaf_algo_b(SelfSimilarSpec(star(9), 6))


class TestAlgorithmC:
    def test_path(self):
        tree, counts = leaf_algo_c(SelfSimilarSpec(path(4), 1))
        assert (tree.p, tree.q) == (8, 7)
        assert counts.matches_closed_form is None

    @settings(max_examples=25, deadline=None)
    @given(trees(min_vertices=3, max_vertices=6))
    def test_stays_a_tree(self, base):
        tree, _ = leaf_algo_c(SelfSimilarSpec(base, 2))
        assert is_tree(tree)


# =============================================================================
# Validation
# =============================================================================


@pytest.mark.parametrize(
    "kwargs",
    [
        {"base": cycle(4)},
        {"base": path(2)},
        {"base": path(3), "t": 0},
        {"base": path(3), "root": 5},
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(PreconditionError):
        SelfSimilarSpec(**kwargs)
