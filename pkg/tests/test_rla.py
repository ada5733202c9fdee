"""Tests for leaf-adding extensions and the counting helpers."""

import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topocode.errors import PreconditionError, VerificationError
from topocode.graph import cycle, path, random_caterpillar, star
from topocode.labelings import Labeling, caterpillar_graceful, equivalent_labeling, search_labeling, verify
from topocode.rla import (
    LeafPlan,
    exact_partition_count,
    leaf_addition_count,
    partition_count,
    peel_layers,
    peeling_lower_bound,
    rla_e_image,
    rla_kd_elegant,
    rla_kd_graceful_total,
    rla_kd_harmonious,
    rla_kd_odd_elegant,
    rla_odd_graceful,
    rla_strongly_edge_magic,
)

from utils.fixtures import h3164_odd, p4_graceful

P2_TOTAL = Labeling((0, 1), (1,))


def partitions(m: int, largest: int) -> int:
    """Brute-force count of partitions of m with parts at most ``largest``."""
    if m == 0:
        return 1
    return sum(partitions(m - part, part) for part in range(1, min(m, largest) + 1))


# =============================================================================
# Leaf plans
# =============================================================================


class TestLeafPlan:
    def test_drops_zero_counts(self):
        plan = LeafPlan({3: 0, 1: 2})
        assert plan.counts == {1: 2}
        assert plan.m == 2
        assert plan.count(3) == 0

    @pytest.mark.parametrize("counts", [{}, {0: 0}, {0: -1}])
    def test_rejects(self, counts):
        with pytest.raises(PreconditionError):
            LeafPlan(counts)

    def test_random_is_reproducible(self):
        g = path(5)
        a, b = LeafPlan.random(g, 6, seed=7), LeafPlan.random(g, 6, seed=7)
        assert a == b
        assert a.m == 6
        assert set(a.counts) <= set(g.vertices)

    def test_apply(self):
        grown, leaves = LeafPlan({0: 2}).apply(path(2))
        assert (grown.p, grown.q) == (4, 3)
        assert leaves == {0: [2, 3]}


# =============================================================================
# Odd-graceful
# =============================================================================


def test_rla_odd_graceful_small():
    g, lab = rla_odd_graceful(path(2), Labeling((0, 1)), LeafPlan({0: 1}))
    assert g.edges == ((0, 1), (0, 2))
    assert lab.vertex == (0, 3, 1)


def test_rla_odd_graceful_needs_set_ordered_input():
    with pytest.raises(VerificationError):
        rla_odd_graceful(path(3), Labeling((0, 1, 2)), LeafPlan({0: 1}))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**16))
def test_rla_odd_graceful_random_plans(m, seed):
    g, f = h3164_odd()
    plan = LeafPlan.random(g, m, seed=seed)
    grown, lab = rla_odd_graceful(g, f, plan)
    assert (grown.p, grown.q) == (g.p + m, g.q + m)
    assert verify(grown, lab, "odd-graceful").accepted


# =============================================================================
# Modular kinds
# =============================================================================


def test_rla_kd_harmonious():
    f = search_labeling(path(4), "kd-harmonious", k=1, d=1)
    grown, lab = rla_kd_harmonious(path(4), f, LeafPlan({1: 1, 2: 1}), k=1, d=1)
    assert grown.q == 5
    assert verify(grown, lab, k=1, d=1).accepted


def test_rla_kd_elegant():
    g, f = p4_graceful()
    alpha = equivalent_labeling(g, f, "kd-elegant", k=1, d=1)
    grown, lab = rla_kd_elegant(g, alpha, LeafPlan({1: 1}), k=1, d=1)
    assert lab.vertex == (1, 3, 0, 2, 2)


def test_rla_kd_odd_elegant():
    f = Labeling((0, 2), kind="kd-odd-elegant")
    grown, lab = rla_kd_odd_elegant(path(2), f, LeafPlan({0: 1}), k=1, d=1)
    assert lab.vertex == (0, 2, 4)
    assert lab.edge == (2, 4)


def test_rla_kd_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        rla_kd_harmonious(path(2), Labeling((0, 1)), LeafPlan({0: 1}), k=1, d=0)


# =============================================================================
# Gracefully total and its derived colorings
# =============================================================================


class TestGracefulTotal:
    def test_single_leaf(self):
        grown, lab = rla_kd_graceful_total(path(2), P2_TOTAL, LeafPlan({0: 1}), 1, 1)
        assert (lab.vertex, lab.edge) == ((0, 2, 1), (2, 1))

    def test_permutations_give_distinct_colorings(self):
        plan = LeafPlan({0: 2})
        found = [rla_kd_graceful_total(path(2), P2_TOTAL, plan, 1, 1, perm)[1] for perm in ([0, 1], [1, 0])]
        assert found[0].vertex == (0, 3, 1, 2)
        assert found[1].vertex == (0, 3, 2, 1)

    def test_bad_permutation(self):
        with pytest.raises(PreconditionError):
            rla_kd_graceful_total(path(2), P2_TOTAL, LeafPlan({0: 2}), 1, 1, [0, 0])

    def test_needs_positive_k(self):
        with pytest.raises(PreconditionError):
            rla_kd_graceful_total(path(2), P2_TOTAL, LeafPlan({0: 1}), 0, 1)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 5), st.integers(0, 1000), st.integers(1, 3), st.integers(1, 3))
    def test_random_plans(self, m, seed, k, d):
        g, f = p4_graceful()
        base = Labeling(tuple(c * d if i in (0, 2) else k + (c - 1) * d for i, c in enumerate(f.vertex)))
        base = base.with_edges(abs(base.vertex[u] - base.vertex[v]) for u, v in g.edges)
        grown, lab = rla_kd_graceful_total(g, base, LeafPlan.random(g, m, seed=seed), k, d)
        assert verify(grown, lab, "kd-gracefully-total", k=k, d=d).accepted


def test_rla_e_image():
    result = rla_e_image(path(2), P2_TOTAL, LeafPlan({0: 1}), 1, 1)
    assert result.image.vertex == (0, 1, 2)
    assert result.image.edge == (1, 2)
    assert result.constant == 3
    assert result.reflection == 3
    assert all(a + b == result.constant for a, b in zip(result.labeling.edge, result.image.edge))


def test_rla_e_image_on_a_longer_spine():
    g, f = p4_graceful()
    base = equivalent_labeling(g, f, "kd-graceful", k=1, d=2)
    total = Labeling(base.vertex, tuple(abs(base.vertex[u] - base.vertex[w]) for u, w in g.edges))
    result = rla_e_image(g, total, LeafPlan({0: 1, 3: 2}), 1, 2)
    q = result.graph.q
    assert result.constant == 2 + (q - 1) * 2
    assert verify(result.graph, result.image).accepted
    assert len(set(result.image.edge)) == q
    assert all(a + b == result.constant for a, b in zip(result.labeling.edge, result.image.edge))


def test_rla_strongly_edge_magic():
    grown, lab = rla_strongly_edge_magic(path(2), P2_TOTAL, LeafPlan({0: 1}), 1, 1)
    assert (lab.vertex, lab.edge) == ((0, 2, 1), (1, 2))
    assert lab.params["magic"] == 3
    assert verify(grown, lab).accepted


# =============================================================================
# Random caterpillars
# =============================================================================

CATERPILLARS = 100


def x_side(g, f):
    """The side of a set-ordered graceful labeling holding color 0."""
    x, y = g.bipartition()
    return x if f.vertex.index(0) in x else y


def kd_total_base(g, f, k, d):
    star_colors = equivalent_labeling(g, f, "kd-graceful", k=k, d=d).vertex
    return Labeling(star_colors, tuple(abs(star_colors[u] - star_colors[w]) for u, w in g.edges))


def grow_odd_graceful(g, f, plan, k, d):
    x = x_side(g, f)
    base = Labeling(tuple(2 * c if v in x else 2 * c - 1 for v, c in enumerate(f.vertex)))
    return rla_odd_graceful(g, base, plan)


def grow_kd_harmonious(g, f, plan, k, d):
    return rla_kd_harmonious(g, equivalent_labeling(g, f, "kd-elegant", k=k, d=d), plan, k, d)


def grow_kd_elegant(g, f, plan, k, d):
    return rla_kd_elegant(g, equivalent_labeling(g, f, "kd-elegant", k=k, d=d), plan, k, d)


def grow_kd_odd_elegant(g, f, plan, k, d):
    x = x_side(g, f)
    top = max(f.vertex[v] for v in x)
    base = Labeling(tuple(2 * (top - c) * d if v in x else k + (2 * c - 1) * d for v, c in enumerate(f.vertex)))
    return rla_kd_odd_elegant(g, base, plan, k, d)


def grow_kd_graceful_total(g, f, plan, k, d):
    return rla_kd_graceful_total(g, kd_total_base(g, f, k, d), plan, k, d)


def grow_e_image(g, f, plan, k, d):
    result = rla_e_image(g, kd_total_base(g, f, k, d), plan, k, d)
    assert all(a + b == result.constant for a, b in zip(result.labeling.edge, result.image.edge))
    assert verify(result.graph, result.labeling).accepted
    return result.graph, result.image


def grow_strongly_edge_magic(g, f, plan, k, d):
    return rla_strongly_edge_magic(g, kd_total_base(g, f, k, d), plan, k, d)


# (k, d) choices keep the X and Y color classes of the modular kinds apart.
GROWERS = {
    "odd-graceful": (grow_odd_graceful, [(0, 1)]),
    "kd-harmonious": (grow_kd_harmonious, [(1, 2), (3, 2), (2, 3), (1, 3)]),
    "kd-elegant": (grow_kd_elegant, [(1, 1), (2, 1), (1, 2), (3, 2)]),
    "kd-odd-elegant": (grow_kd_odd_elegant, [(0, 1), (2, 1), (1, 2), (3, 2)]),
    "kd-gracefully-total": (grow_kd_graceful_total, [(1, 1), (2, 1), (1, 2), (3, 2)]),
    "e-image": (grow_e_image, [(1, 1), (2, 1), (1, 2), (3, 2)]),
    "strongly-edge-magic": (grow_strongly_edge_magic, [(1, 1), (2, 1), (1, 2), (3, 2)]),
}


@pytest.mark.slow
@pytest.mark.parametrize("algo", sorted(GROWERS))
def test_random_caterpillars(algo):
    grow, choices = GROWERS[algo]
    for seed in range(CATERPILLARS):
        rng = random.Random(seed)
        g = random_caterpillar(rng, max_spine=5, max_legs=3)
        f = caterpillar_graceful(g)
        plan = LeafPlan.random(g, rng.randint(1, 4), seed=seed)
        k, d = rng.choice(choices)
        grown, lab = grow(g, f, plan, k, d)
        assert (grown.p, grown.q) == (g.p + plan.m, g.q + plan.m)
        assert verify(grown, lab).accepted, (seed, g, plan)


@pytest.mark.parametrize("algo", ["kd-harmonious", "kd-elegant", "kd-odd-elegant"])
def test_graceful_bases_fill_directly(algo):
    grow, choices = GROWERS[algo]
    for seed in range(20):
        rng = random.Random(seed)
        g = random_caterpillar(rng)
        plan = LeafPlan.random(g, rng.randint(1, 4), seed=seed)
        k, d = rng.choice(choices)
        _, lab = grow(g, caterpillar_graceful(g), plan, k, d)
        assert lab.params["fill"] == "direct", (seed, g, plan)


def test_kd_harmonious_direct_fill_on_a_star():
    g = star(2)
    alpha = equivalent_labeling(g, caterpillar_graceful(g), "kd-elegant", k=1, d=2)
    grown, lab = rla_kd_harmonious(g, alpha, LeafPlan({1: 1, 0: 1}), 1, 2)
    assert lab.params == {"k": 1, "d": 2, "fill": "direct"}
    assert verify(grown, lab).accepted


# =============================================================================
# Counting
# =============================================================================


@pytest.mark.parametrize("m, k, expected", [(4, 2, 3), (5, 5, 7), (0, 3, 1), (3, 0, 0), (10, 10, 42)])
def test_partition_count(m, k, expected):
    assert partition_count(m, k) == expected


@pytest.mark.slow
@pytest.mark.parametrize("m", range(0, 21))
def test_partition_count_matches_enumeration(m):
    for k in range(0, m + 2):
        assert partition_count(m, k) == partitions(m, k)


def test_exact_partition_count():
    assert exact_partition_count(5, 2) == 2
    assert exact_partition_count(0, 0) == 1
    assert sum(exact_partition_count(7, k) for k in range(1, 8)) == partition_count(7, 7)


def test_leaf_addition_count():
    assert leaf_addition_count(2, 1) == 2
    assert leaf_addition_count(1, 3) == 1
    assert leaf_addition_count(3, 2) == 3 + 6 * 1 * 2
    with pytest.raises(PreconditionError):
        leaf_addition_count(-1, 2)


class TestPeeling:
    def test_path(self):
        assert peel_layers(path(6)) == [2, 2]
        assert peeling_lower_bound(path(6)) == factorial(2)

    def test_star_needs_no_peeling(self):
        assert peel_layers(star(4)) == []
        assert peeling_lower_bound(star(4)) == 1

    def test_not_a_tree(self):
        with pytest.raises(PreconditionError):
            peel_layers(cycle(4))
