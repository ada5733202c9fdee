"""Tests for graphs, split/coincide operations, trees and spanning trees."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topocode.errors import InvalidGraphError, PreconditionError, SizeLimitError
from topocode.graph import (
    Graph,
    add_leaves,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    disjoint_union,
    edge_coincide,
    edge_split,
    edge_swap,
    is_tree,
    isomorphic,
    iter_prufer_trees,
    path,
    random_caterpillar,
    remove_vertices,
    spanning_tree_count,
    spanning_tree_enumerate,
    star,
    vertex_coincide,
    vertex_split,
)

from utils.strategies import graphs, to_networkx, trees


def double_star() -> Graph:
    """Edge 0-1, vertex 0 also adjacent to 2 and 3, vertex 1 to 4 and 5."""
    return Graph(6, ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5)))


# =============================================================================
# Graph values
# =============================================================================


def test_edges_are_canonical():
    g = Graph(4, [(1, 0), (3, 2), (2, 1)])
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g == path(4)


@pytest.mark.parametrize(
    "p, edges",
    [
        (2, [(0, 0)]),
        (2, [(0, 1), (1, 0)]),
        (2, [(0, 2)]),
        (-1, []),
    ],
)
def test_invalid_graphs_rejected(p, edges):
    with pytest.raises(InvalidGraphError):
        Graph(p, edges)


def test_names_must_cover_every_vertex():
    assert Graph(2, [(0, 1)], names=("a", "b")).names == ("a", "b")
    with pytest.raises(InvalidGraphError):
        Graph(2, [(0, 1)], names=("a",))


def test_neighbors_and_leaves():
    g = star(3)
    assert g.neighbors(0) == frozenset({1, 2, 3})
    assert g.leaves() == [1, 2, 3]
    with pytest.raises(PreconditionError):
        g.neighbors(9)


def test_bipartition():
    x, y = path(4).bipartition()
    assert x == frozenset({0, 2})
    assert y == frozenset({1, 3})
    assert cycle(5).bipartition() is None


def test_bipartition_puts_each_smallest_vertex_first():
    g = disjoint_union(path(2), path(3))
    x, y = g.bipartition()
    assert x == frozenset({0, 2, 4})
    assert g.components() == [[0, 1], [2, 3, 4]]


class TestDegreeSequence:
    def test_complete(self):
        assert degree_sequence(complete(4)) == (3, 3, 3, 3)

    def test_add_leaves(self):
        g = add_leaves(complete(3), {0: 2})
        assert degree_sequence(g) == (4, 2, 2, 1, 1)
        assert g.p == 5 and g.q == 5

    def test_negative_leaf_count(self):
        with pytest.raises(PreconditionError):
            add_leaves(path(2), {0: -1})


# =============================================================================
# Split and coincide
# =============================================================================


class TestVertexSplit:
    def test_split_star_center(self):
        g, remap = vertex_split(star(3), 0, {1})
        assert g.p == 5 and g.q == 3
        assert g.edges == ((0, 1), (2, 4), (3, 4))
        assert remap == (0, 1, 2, 3)

    def test_coincide_undoes_split(self):
        split = vertex_split(star(3), 0, {1}).graph
        assert vertex_coincide(split, 0, 4).graph == star(3)

    @pytest.mark.parametrize("part", [set(), {1, 2, 3}, {7}])
    def test_part_must_be_proper_subset(self, part):
        with pytest.raises(PreconditionError):
            vertex_split(star(3), 0, part)

    def test_degree_one_vertex(self):
        with pytest.raises(PreconditionError):
            vertex_split(path(3), 0, {1})


class TestVertexCoincide:
    def test_renumbers_densely(self):
        g, remap = vertex_coincide(path(4), 0, 3)
        assert g == cycle(3)
        assert remap == (0, 1, 2, 0)

    def test_adjacent_vertices(self):
        with pytest.raises(PreconditionError):
            vertex_coincide(path(3), 0, 1)

    def test_shared_neighbor_makes_multi_edge(self):
        with pytest.raises(PreconditionError):
            vertex_coincide(path(3), 0, 2)


class TestEdgeSplit:
    def test_split_and_coincide_round_trip(self):
        g = double_star()
        split, _ = edge_split(g, (0, 1), {2}, {4})
        assert split.p == g.p + 2
        assert split.q == g.q + 1
        assert len(split.components()) == 2
        assert all(isomorphic(path(4), remove_vertices(split, set(split.vertices) - set(c)).graph)
                   for c in split.components())
        assert edge_coincide(split, (0, 1), (6, 7)).graph == g

    def test_leaf_needs_permission(self):
        with pytest.raises(PreconditionError):
            edge_split(double_star(), (0, 1), {2, 3}, {4})
        g, _ = edge_split(double_star(), (0, 1), {2, 3}, {4}, allow_leaf=True)
        assert g.degree(6) == 1

    def test_not_an_edge(self):
        with pytest.raises(PreconditionError):
            edge_split(double_star(), (2, 3), {0}, {0})

    def test_coincide_needs_disjoint_edges(self):
        with pytest.raises(PreconditionError):
            edge_coincide(path(4), (0, 1), (1, 2))


def test_edge_swap_keeps_counts():
    g = edge_swap(star(3), (0, 3), (1, 3))
    assert (g.p, g.q) == (4, 3)
    assert isomorphic(g, path(4))
    with pytest.raises(PreconditionError):
        edge_swap(star(3), (0, 1), (0, 2))


def test_remove_vertices_remap():
    g, remap = remove_vertices(path(5), {0, 2})
    assert remap == (None, 0, None, 1, 2)
    assert g.edges == ((1, 2),)


def test_disjoint_union_shifts():
    g = disjoint_union(path(2), path(3))
    assert g.edges == ((0, 1), (2, 3), (3, 4))


# =============================================================================
# Trees
# =============================================================================


class TestIsTree:
    def test_path(self):
        report = is_tree(path(5))
        assert report
        assert report.leaf_count == 2
        assert report.leaf_identity

    def test_cycle(self):
        report = is_tree(cycle(5))
        assert not report
        assert report.connected and not report.size_identity

    def test_forest(self):
        assert not is_tree(disjoint_union(path(2), path(2)))

    def test_single_vertex_counts_isolated_vertices(self):
        report = is_tree(Graph(1, ()))
        assert report
        assert report.leaf_count == 0
        assert report.leaf_identity

    @pytest.mark.parametrize("g", [disjoint_union(path(2), Graph(1, ())), disjoint_union(path(3), path(2))])
    def test_leaf_identity_fails_on_forests(self, g):
        report = is_tree(g)
        assert not report
        assert not report.leaf_identity

    @given(trees())
    def test_leaf_identity_holds_on_every_tree(self, t):
        report = is_tree(t)
        assert report.is_tree
        assert report.leaf_identity


def test_caterpillar_shape():
    g = caterpillar([2, 0, 1])
    assert (g.p, g.q) == (6, 5)
    assert is_tree(g)
    assert degree_sequence(g) == (3, 2, 2, 1, 1, 1)


def test_random_caterpillar_is_tree():
    rng = random.Random(3)
    for _ in range(20):
        assert is_tree(random_caterpillar(rng))


def test_prufer_trees_are_distinct():
    found = {t.edges for t in iter_prufer_trees(4)}
    assert len(found) == 16


# =============================================================================
# Spanning trees
# =============================================================================


@pytest.mark.parametrize("g, count", [(cycle(5), 5), (complete_bipartite(2, 2), 4), (path(4), 1), (Graph(1, ()), 1)])
def test_spanning_tree_count(g, count):
    assert spanning_tree_count(g) == count


@pytest.mark.parametrize("n", range(2, 8))
def test_cayley_formula(n):
    assert spanning_tree_count(complete(n)) == n ** (n - 2)


def test_spanning_tree_count_disconnected():
    with pytest.raises(PreconditionError):
        spanning_tree_count(disjoint_union(path(2), path(2)))


def test_enumerate_k4_census():
    found = spanning_tree_enumerate(complete(4))
    assert len(found) == 16
    stars = [t for t in found if max(t.degree(v) for v in t.vertices) == 3]
    assert len(stars) == 4
    assert all(isomorphic(t, path(4)) for t in found if t not in stars)


def test_enumerate_size_limit():
    with pytest.raises(SizeLimitError):
        spanning_tree_enumerate(complete(9))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=6))
def test_enumeration_matches_matrix_tree_theorem(g):
    if not g.is_connected():
        return
    assert len(spanning_tree_enumerate(g)) == spanning_tree_count(g)


# =============================================================================
# Isomorphism
# =============================================================================


@settings(max_examples=80, deadline=None)
@given(graphs(max_vertices=6), graphs(max_vertices=6))
def test_isomorphism_agrees_with_networkx(g, h):
    assert isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=7), st.randoms(use_true_random=False))
def test_relabeled_graph_is_isomorphic(g, rng):
    perm = list(g.vertices)
    rng.shuffle(perm)
    assert isomorphic(g, g.relabel(perm))


def test_isomorphism_size_limit():
    with pytest.raises(SizeLimitError):
        isomorphic(path(11), path(11))
