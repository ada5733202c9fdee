"""Tests for every-zero graphic groups and the spanning-tree orbits of K_n."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topocode.errors import PreconditionError, SizeLimitError
from topocode.graph import path, star
from topocode.groups import GraphicGroup, build_group, classify_spanning_tree_groups, group_add, verify_group_laws

from utils.fixtures import PATH_GROUP, STAR_MATRICES
from utils.strategies import graphs


@pytest.fixture
def stars():
    return build_group(star(3), (1, 2, 3, 4), 4)


# =============================================================================
# Members
# =============================================================================


@pytest.mark.parametrize("r", range(4))
def test_star_members_match_worked_matrices(stars, r):
    assert stars.matrix(r).rows() == STAR_MATRICES[r]


@pytest.mark.parametrize("r", range(4))
def test_path_members(r):
    grp = build_group(path(4), (1, 2, 3, 4), 4)
    lab = grp.element(r)
    assert (lab.vertex, lab.edge) == PATH_GROUP[r]


def test_colors_stay_in_range():
    grp = build_group(path(3), (5, 1, 9), 3)
    assert grp.colors(0) == (2, 1, 3)
    assert len(grp) == 3


def test_modular_edge_rule():
    grp = build_group(path(3), (1, 2, 3), 3, edge_rule="mod-sum")
    assert grp.element(0).edge == (0, 2)


@pytest.mark.parametrize("args", [(path(2), (1, 2), 0), (path(2), (1,), 2)])
def test_group_needs_valid_input(args):
    with pytest.raises(PreconditionError):
        GraphicGroup(*args)


def test_member_index_range(stars):
    with pytest.raises(PreconditionError):
        stars.colors(4)


# =============================================================================
# Every-zero addition
# =============================================================================


def test_star_sum(stars):
    assert group_add(stars, 1, 2, 0) == 3


def test_any_member_can_be_zero(stars):
    assert group_add(stars, 1, 2, 1) == 2
    assert group_add(stars, 3, 3, 2) == 0


def test_laws_hold(stars):
    report = verify_group_laws(stars)
    assert report.accepted
    assert report.details == {"order": 4, "distinct": 4}


@settings(max_examples=40, deadline=None)
@given(graphs(min_vertices=1, max_vertices=5), st.integers(1, 5), st.data())
def test_laws_hold_for_any_base(g, m, data):
    base = data.draw(st.lists(st.integers(1, 9), min_size=g.p, max_size=g.p))
    assert verify_group_laws(build_group(g, base, m)).accepted


# =============================================================================
# Spanning-tree orbits
# =============================================================================


def test_k4_orbits():
    orbits = classify_spanning_tree_groups(4)
    assert sorted(o.size for o in orbits) == [2, 2, 4, 4, 4]
    assert sum(o.size for o in orbits) == 16
    stars_orbit = [o for o in orbits if o.shape == "K_1,3"]
    assert len(stars_orbit) == 1 and stars_orbit[0].size == 4


def test_k4_family_repeats_members():
    for orbit in classify_spanning_tree_groups(4):
        assert len(orbit.family) == 4
        assert set(orbit.family) == set(orbit.members)


@pytest.mark.parametrize("n, total", [(1, 1), (2, 1), (3, 3), (5, 125)])
def test_orbits_cover_every_tree(n, total):
    assert sum(o.size for o in classify_spanning_tree_groups(n)) == total


def test_classification_limits():
    with pytest.raises(SizeLimitError):
        classify_spanning_tree_groups(6)
    with pytest.raises(PreconditionError):
        classify_spanning_tree_groups(0)
