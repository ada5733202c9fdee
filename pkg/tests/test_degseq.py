"""Tests for degree sequences, their operations, Cds-groups and lattices."""

from itertools import product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from topocode.errors import MatrixShapeError, PreconditionError, SizeLimitError
from topocode.degseq import (
    CdsMatrix,
    cds_add,
    cds_group,
    ds_lattice_sample,
    ds_transform,
    erdos_gallai,
    iter_realizations,
    realize_brute,
)
from topocode.graph import degree_sequence

from utils.strategies import graphs


# =============================================================================
# Realizability
# =============================================================================


@pytest.mark.parametrize(
    "d, expected",
    [((3, 3, 3, 3), True), ((3, 3, 1, 1), False), ((2, 2, 2), True), ((1,), False), ((), True), ((4, 1, 1, 1), False)],
)
def test_erdos_gallai(d, expected):
    assert erdos_gallai(d) is expected


@given(graphs())
def test_every_graph_is_graphical(g):
    assert erdos_gallai(degree_sequence(g))


@given(st.lists(st.integers(0, 7), max_size=8))
def test_erdos_gallai_agrees_with_networkx(d):
    assert erdos_gallai(d) == nx.is_valid_degree_sequence_erdos_gallai(d)


def test_realize_triangle():
    g = realize_brute((2, 2, 2))
    assert (g.p, g.q) == (3, 3)
    assert realize_brute((3, 3, 1, 1)) is None


def test_realizations_are_distinct():
    found = {g.edges for g in iter_realizations((1, 1, 1, 1))}
    assert len(found) == 3


def test_realization_size_limit():
    with pytest.raises(SizeLimitError):
        realize_brute((1,) * 10)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 6))
def test_erdos_gallai_matches_realization(n):
    for d in product(range(n), repeat=n):
        g = realize_brute(d)
        assert erdos_gallai(d) == (g is not None), d
        if g is not None:
            assert tuple(g.degree(v) for v in g.vertices) == d


# =============================================================================
# Operation algebra
# =============================================================================


@pytest.mark.parametrize(
    "d, op, other, args, expected",
    [
        ((3, 2, 2, 1), "increase", None, {"k": 4}, (4, 4, 3, 3, 2)),
        ((2, 2, 2), "decrease", None, {"index": 0}, (1, 1)),
        ((3, 2, 2, 1), "subtract", (2, 1), {}, (3, 2)),
        ((2, 1), "union", (1, 1), {}, (2, 1, 1, 1)),
        ((4, 3, 2, 2, 1), "component-coincide", (3, 3, 2, 2, 2), {"s": 2}, (7, 6, 2, 2, 2, 2, 2, 1)),
        ((2, 1, 1), "direct-sum", (1, 1), {}, (3, 2, 1)),
        ((2, 1, 1), "complement", None, {}, (1, 1, 0)),
        ((4, 2), "decompose", None, {"parts": {0: [2, 2]}}, (2, 2, 2)),
        ((2, 2, 2), "compound", None, {"groups": [[0, 1]]}, (4, 2)),
        ((2, 1, 1), "self-contract", None, {}, (3, 1)),
        ((3, 1), "self-split", None, {"part": 1}, (2, 1, 1)),
        ((1, 1), "degree-coincide", (1, 1), {}, (2, 1, 1)),
        ((1, 1), "degree-join", (1, 1), {}, (2, 2, 1, 1)),
    ],
)
def test_ds_transform(d, op, other, args, expected):
    assert ds_transform(d, op, other, **args).sequence == expected


def test_result_keeps_position_map():
    res = ds_transform((1, 3), "union", (2,))
    assert res.raw == (1, 3, 2)
    assert all(res.sequence[t] == res.raw[res.order[t]] for t in range(len(res.raw)))


def test_union_of_graphs_stays_graphical():
    assert ds_transform((2, 2, 2), "union", (1, 1)).graphical
    assert not ds_transform((3, 3), "union", (1,)).graphical


@pytest.mark.slow
@pytest.mark.parametrize("op", ["degree-coincide", "degree-join"])
def test_graphical_inputs_give_graphical_output(op):
    seqs = [
        d
        for n in range(1, 4)
        for d in product(range(4), repeat=n)
        if list(d) == sorted(d, reverse=True) and erdos_gallai(d)
    ]
    for d in seqs:
        for other in seqs:
            for i in range(len(d)):
                for j in range(len(other)):
                    assert ds_transform(d, op, other, i=i, j=j).graphical


def test_coincide_can_repair_a_non_graphical_sequence():
    assert not erdos_gallai((3, 3, 1, 1))
    assert ds_transform((3, 3, 1, 1), "degree-coincide", (1, 1), i=2).graphical


@pytest.mark.parametrize(
    "d, op, other, args",
    [
        ((1, 1), "increase", None, {"k": 3}),
        ((2, 1), "decrease", None, {"index": 0}),
        ((2, 1), "subtract", (3,), {}),
        ((1, 1), "direct-sum", (1, 1, 1), {}),
        ((5, 1), "complement", None, {}),
        ((4,), "decompose", None, {"parts": {0: [1, 2]}}),
        ((2, 2), "compound", None, {"groups": [[0, 1], [1]]}),
        ((1,), "self-contract", None, {}),
        ((3,), "self-split", None, {"part": 3}),
        ((1, 1), "degree-coincide", (1,), {"j": 2}),
        ((1, 1), "union", None, {}),
        ((1, 1), "reverse", None, {}),
    ],
)
def test_ds_transform_rejects(d, op, other, args):
    with pytest.raises(PreconditionError):
        ds_transform(d, op, other, **args)


@given(st.lists(st.integers(0, 6), max_size=6), st.lists(st.integers(0, 6), max_size=6))
def test_subtract_undoes_union(a, b):
    joined = ds_transform(a, "union", b).raw
    assert sorted(ds_transform(joined, "subtract", b).raw) == sorted(a)


# =============================================================================
# Cds-matrix groups
# =============================================================================


class TestCdsGroup:
    def test_small_group(self):
        grp = cds_group(CdsMatrix((2, 1, 1), (1, 2, 1)))
        assert grp.modulus == 2
        assert grp.element(1).colors == (2, 1, 2)
        assert cds_add(grp, 0, 1, 0) == 1

    def test_index_of(self):
        grp = cds_group(CdsMatrix((3, 2, 2, 1), (1, 2, 3, 1)))
        assert grp.index_of(grp.element(2)) == 2
        with pytest.raises(PreconditionError):
            grp.index_of(CdsMatrix((3, 2, 2, 1), (9, 9, 9, 9)))

    def test_shape(self):
        with pytest.raises(MatrixShapeError):
            CdsMatrix((1, 1), (1,))
        with pytest.raises(MatrixShapeError):
            CdsMatrix((), ())

    def test_index_range(self):
        grp = cds_group(CdsMatrix((2, 1, 1), (1, 2, 1)))
        with pytest.raises(PreconditionError):
            cds_add(grp, 0, 2, 0)

    @given(st.integers(1, 6), st.data())
    def test_every_zero(self, m, data):
        grp = cds_group(CdsMatrix((2, 1, 1), (1, 2, 3)), m)
        i, j, k = (data.draw(st.integers(0, m - 1)) for _ in range(3))
        lam = cds_add(grp, i, j, k)
        assert cds_add(grp, i, k, k) == i
        assert cds_add(grp, lam, k, j) == i
        assert all(1 <= c <= m for c in grp.element(lam).colors)


# =============================================================================
# Lattices
# =============================================================================


class TestLattice:
    def test_linear_sum(self):
        assert ds_lattice_sample([(2, 2, 2)], [2]).sequence == (4, 4, 4)
        assert ds_lattice_sample([(2, 1, 1), (1, 1, 0)], [1, 2]).sequence == (4, 3, 1)

    def test_degree_coincide(self):
        res = ds_lattice_sample([(1, 1)], [2], "degree-coincide")
        assert res.sequence == (2, 1, 1)
        assert res.graphical

    def test_degree_join_is_reproducible(self):
        base = [(2, 1, 1), (1, 1)]
        a = ds_lattice_sample(base, [2, 1], "degree-join", seed=5)
        b = ds_lattice_sample(base, [2, 1], "degree-join", seed=5)
        assert a == b
        assert sum(a.sequence) == 2 * 4 + 2 + 2 * 2

    @pytest.mark.parametrize(
        "base, coeffs, op",
        [([], [], "linear-sum"), ([(1, 1)], [1, 1], "linear-sum"), ([(1, 1)], [0], "linear-sum"), ([(1, 1)], [1], "sum")],
    )
    def test_rejects(self, base, coeffs, op):
        with pytest.raises(PreconditionError):
            ds_lattice_sample(base, coeffs, op)

    def test_linear_sum_lengths(self):
        with pytest.raises(MatrixShapeError):
            ds_lattice_sample([(1, 1), (1,)], [1, 1])
