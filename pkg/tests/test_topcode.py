"""Tests for Topcode-matrices and their column algebra."""

import pytest
from hypothesis import given

from topocode.errors import MatrixShapeError, MergeConflictError, PreconditionError
from topocode.graph import path, star
from topocode.labelings import Labeling, verify
from topocode.topcode import (
    TopcodeMatrix,
    coincide,
    column_exchange,
    difference,
    dual_matrix,
    from_colored_graph,
    intersect,
    is_graphicable,
    merge,
    realize,
    scale_add,
    split,
    standard_form,
    subtract,
    tm_degree_sequence,
    union,
    union_sum,
    xy_exchange,
)

from utils.fixtures import (
    A_INTERSECT_B,
    A_MINUS_B,
    A_UNION_B,
    A_UNION_SUM_B,
    B_MINUS_A,
    H3164_ROWS,
    MATRIX_A,
    MATRIX_B,
    STAR_MATRICES,
    star_s1,
)
from utils.strategies import matrices

A = TopcodeMatrix.from_rows(MATRIX_A)
B = TopcodeMatrix.from_rows(MATRIX_B)
S1 = TopcodeMatrix.from_rows(STAR_MATRICES[0])


# =============================================================================
# Construction
# =============================================================================


class TestShape:
    def test_columns(self):
        assert S1.q == 3
        assert S1.columns[0] == (1, 3, 2)

    @pytest.mark.parametrize("rows", [[[1], [2]], [[1, 2], [3], [4, 5]], [[], [], []]])
    def test_bad_shapes(self, rows):
        with pytest.raises(MatrixShapeError):
            TopcodeMatrix.from_rows(rows)

    def test_valued_rule_checked(self):
        assert TopcodeMatrix.from_rows(STAR_MATRICES[0], valued="plain-sum").valued == "plain-sum"
        with pytest.raises(PreconditionError):
            TopcodeMatrix.from_rows(STAR_MATRICES[0], valued="abs-difference")

    def test_dict_round_trip(self):
        assert TopcodeMatrix.from_dict(S1.to_dict()) == S1


def test_from_colored_graph():
    g, f = star_s1()
    assert from_colored_graph(g, f, "plain-sum").rows() == STAR_MATRICES[0]


def test_from_colored_graph_orients_columns():
    m = from_colored_graph(path(3), Labeling((2, 0, 1), (2, 1)))
    assert m.rows() == [[0, 0], [2, 1], [2, 1]]


def test_degree_sequence_and_graphicable():
    assert tm_degree_sequence(S1) == (3, 1, 1, 1)
    assert is_graphicable(S1)
    h = TopcodeMatrix.from_rows(H3164_ROWS)
    assert sum(tm_degree_sequence(h)) == 2 * h.q
    assert is_graphicable(h)


class TestRealize:
    def test_path(self):
        r = realize(TopcodeMatrix.from_rows([[0, 1], [1, 1], [1, 2]]))
        assert r.graph == path(3)
        assert r.values == (0, 1, 2)
        assert r.labeling.edge_colors() == (1, 1)

    def test_star_is_felicitous_host(self):
        r = realize(S1)
        assert r.graph == star(3)
        assert from_colored_graph(r.graph, r.labeling).same_columns(S1)

    def test_graceful_matrix(self):
        r = realize(TopcodeMatrix.from_rows(H3164_ROWS))
        assert (r.graph.p, r.graph.q) == (15, 15)
        assert verify(r.graph, r.labeling, "set-ordered-graceful").accepted

    def test_loop(self):
        with pytest.raises(PreconditionError):
            realize(TopcodeMatrix.from_rows([[1], [1], [1]]))

    def test_multi_edge(self):
        with pytest.raises(PreconditionError):
            realize(TopcodeMatrix.from_rows([[0, 0], [1, 2], [1, 1]]))


# =============================================================================
# Column algebra
# =============================================================================


class TestUnionExample:
    def test_union_sum(self):
        assert union_sum(A, B).rows() == A_UNION_SUM_B

    def test_intersect(self):
        assert intersect(A, B).rows() == A_INTERSECT_B

    def test_union(self):
        assert union(A, B).rows() == A_UNION_B

    def test_difference(self):
        assert difference(A, B).rows() == A_MINUS_B
        assert difference(B, A).rows() == B_MINUS_A

    def test_subtract_needs_sub_multiset(self):
        with pytest.raises(PreconditionError):
            subtract(B, A)
        assert subtract(A, intersect(A, B)).rows() == A_MINUS_B


def test_union_sum_needs_two():
    with pytest.raises(PreconditionError):
        union_sum(A)


def test_subtract_self_is_empty():
    assert subtract(A, A).q == 0


def test_coincide_then_split():
    h = TopcodeMatrix.from_rows([[7], [1], [18]])
    joined = coincide(A, B, h)
    assert joined.q == A.q + B.q - 1
    left, right = split(joined, h)
    assert left.same_columns(A)
    assert right.same_columns(B)


def test_split_needs_contiguous_block():
    with pytest.raises(PreconditionError):
        split(A, TopcodeMatrix.from_rows([[7, 7], [1, 5], [18, 14]]))


@given(matrices(), matrices())
def test_union_is_multiset_max(a, b):
    assert union(a, b).column_multiset() == a.column_multiset() | b.column_multiset()


@given(matrices(), matrices())
def test_intersection_and_difference_partition_left(a, b):
    common = intersect(a, b)
    assert common.same_columns(intersect(b, a))
    assert common.column_multiset() + difference(a, b).column_multiset() == a.column_multiset()


# =============================================================================
# Exchanges, standard form, dual
# =============================================================================


def test_column_exchange():
    assert column_exchange(S1, 0, 2).rows() == [[1, 1, 1], [5, 4, 3], [4, 3, 2]]
    with pytest.raises(PreconditionError):
        column_exchange(S1, 0, 3)


def test_xy_exchange_keeps_valuation():
    m = xy_exchange(TopcodeMatrix.from_rows(STAR_MATRICES[0], valued="plain-sum"), 1)
    assert m.rows() == [[1, 3, 1], [3, 4, 5], [2, 1, 4]]
    assert m.valued == "plain-sum"


def test_standard_form():
    m = TopcodeMatrix.from_rows([[1, 0], [2, 1], [0, 3]])
    assert standard_form(m).rows() == [[0, 0], [1, 2], [3, 1]]


@given(matrices())
def test_standard_form_is_idempotent(m):
    if any(a == b for a, _, b in m.columns):
        with pytest.raises(PreconditionError):
            standard_form(m)
        return
    once = standard_form(m)
    assert standard_form(once) == once


class TestDual:
    def test_complement(self):
        assert dual_matrix(S1).rows() == [[4, 4, 4], [5, 4, 3], [3, 2, 1]]

    def test_recompute(self):
        m = TopcodeMatrix.from_rows(STAR_MATRICES[0], valued="plain-sum")
        assert dual_matrix(m, "recompute").rows() == [[4, 4, 4], [7, 6, 5], [3, 2, 1]]

    def test_recompute_needs_rule(self):
        with pytest.raises(PreconditionError):
            dual_matrix(S1, "recompute")

    @given(matrices())
    def test_complement_is_involution(self, m):
        assert dual_matrix(dual_matrix(m)) == m


# =============================================================================
# Arithmetic
# =============================================================================


def test_scale_add():
    assert scale_add(2, S1).rows() == [[2, 2, 2], [6, 8, 10], [4, 6, 8]]
    assert scale_add(1, S1, -1, S1).rows() == [[0, 0, 0]] * 3


def test_scale_add_shape():
    with pytest.raises(MatrixShapeError):
        scale_add(1, A, 1, B)


class TestMerge:
    def test_disjoint_support(self):
        a = TopcodeMatrix.from_rows([[1, 0], [0, 0], [0, 0]])
        b = TopcodeMatrix.from_rows([[0, 2], [3, 0], [0, 0]])
        assert merge([a, b]).rows() == [[1, 2], [3, 0], [0, 0]]

    def test_conflict(self):
        with pytest.raises(MergeConflictError):
            merge([S1, S1])
