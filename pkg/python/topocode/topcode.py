"""Topcode-matrices: three integer rows X, E, Y with one column per edge.

This module provides:
- TopcodeMatrix, Realization
- from_colored_graph, tm_degree_sequence, is_graphicable, realize
- union_sum, subtract, intersect, difference, union, coincide, split
- column_exchange, xy_exchange, standard_form, dual_matrix
- scale_add, merge

Columns behave as a multiset for subtraction, intersection and union; the
surviving columns keep the order of the left operand.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .degseq import erdos_gallai
from .errors import MatrixShapeError, MergeConflictError, PreconditionError
from .graph import DegreeSequence, Graph
from .labelings import EDGE_RULES, Labeling

log = logging.getLogger(__name__)

Column = tuple[int, int, int]


# =============================================================================
# TopcodeMatrix
# =============================================================================


@dataclass(frozen=True)
class TopcodeMatrix:
    """
    A 3 x q integer matrix (X, E, Y)^T.

    ``valued`` names the edge rule e_i = r(x_i, y_i) the matrix satisfies, if
    any (a key of ``EDGE_RULES``); ``modulus`` goes with ``mod-sum``.

    An empty matrix is a legal intermediate value (M minus M); the
    constructors ``from_rows`` and ``from_colored_graph`` reject it.

    Usage:
        m = TopcodeMatrix.from_rows([[1, 1, 1], [3, 4, 5], [2, 3, 4]])
        m.q            # 3
        m.columns[0]   # (1, 3, 2)
    """

    x: tuple[int, ...]
    e: tuple[int, ...]
    y: tuple[int, ...]
    valued: Optional[str] = None
    modulus: Optional[int] = None

    def __post_init__(self):
        for name in ("x", "e", "y"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        if not len(self.x) == len(self.e) == len(self.y):
            raise MatrixShapeError(f"rows have lengths {len(self.x)}, {len(self.e)}, {len(self.y)}")
        if self.valued is not None:
            if self.valued not in EDGE_RULES:
                raise PreconditionError(f"unknown edge rule {self.valued!r}")
            rule = EDGE_RULES[self.valued]
            m = self.modulus or self.q
            for i, (a, c, b) in enumerate(self.columns):
                if rule(a, b, m) != c:
                    raise PreconditionError(f"column {i} {(a, c, b)} does not satisfy {self.valued}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], valued: Optional[str] = None) -> "TopcodeMatrix":
        if len(rows) != 3:
            raise MatrixShapeError(f"a Topcode-matrix has three rows, got {len(rows)}")
        m = cls(tuple(rows[0]), tuple(rows[1]), tuple(rows[2]), valued)
        if m.q == 0:
            raise MatrixShapeError("a Topcode-matrix needs at least one column")
        return m

    @classmethod
    def from_columns(cls, columns: Iterable[Column], valued: Optional[str] = None) -> "TopcodeMatrix":
        cols = list(columns)
        return cls(tuple(c[0] for c in cols), tuple(c[1] for c in cols), tuple(c[2] for c in cols), valued)

    @property
    def q(self) -> int:
        return len(self.e)

    @property
    def columns(self) -> list[Column]:
        return list(zip(self.x, self.e, self.y))

    def rows(self) -> list[list[int]]:
        return [list(self.x), list(self.e), list(self.y)]

    def column_multiset(self) -> Counter:
        return Counter(self.columns)

    def same_columns(self, other: "TopcodeMatrix") -> bool:
        """Equal as column multisets."""
        return self.column_multiset() == other.column_multiset()

    def vertex_values(self) -> list[int]:
        return sorted(set(self.x) | set(self.y))

    def to_dict(self) -> dict:
        return {"x": list(self.x), "e": list(self.e), "y": list(self.y)}

    @classmethod
    def from_dict(cls, data: dict) -> "TopcodeMatrix":
        return cls.from_rows([data["x"], data["e"], data["y"]])


def _plain(columns: Iterable[Column]) -> TopcodeMatrix:
    return TopcodeMatrix.from_columns(columns)


# =============================================================================
# Graphs to matrices and back
# =============================================================================


def from_colored_graph(g: Graph, lab: Labeling, valued: Optional[str] = None) -> TopcodeMatrix:
    """
    One column (x_i, e_i, y_i) per edge, in edge-list order, with x_i <= y_i.

    Usage:
        from_colored_graph(star(3), Labeling((1, 2, 3, 4), (3, 4, 5)), "plain-sum")
        # [[1, 1, 1], [3, 4, 5], [2, 3, 4]]
    """
    lab.check_host(g)
    if g.q == 0:
        raise MatrixShapeError("a graph without edges has no Topcode-matrix")
    vc = lab.vertex_colors()
    ec = lab.edge_colors()
    columns = []
    for (u, v), c in zip(g.edges, ec):
        a, b = sorted((vc[u], vc[v]))
        columns.append((a, c, b))
    return TopcodeMatrix.from_columns(columns, valued)


def tm_degree_sequence(m: TopcodeMatrix) -> DegreeSequence:
    """Occurrence count of each distinct value of X and Y, nonincreasing."""
    counts = Counter(m.x) + Counter(m.y)
    return tuple(sorted(counts.values(), reverse=True))


def is_graphicable(m: TopcodeMatrix) -> bool:
    return erdos_gallai(tm_degree_sequence(m))


class Realization(NamedTuple):
    graph: Graph
    values: tuple[int, ...]
    labeling: Labeling


def realize(m: TopcodeMatrix) -> Realization:
    """
    The graph with one vertex per distinct value and one edge per column.

    Vertex i carries ``values[i]`` (values sorted ascending); the labeling
    colors vertices with their values and edges with E.

    Usage:
        realize(TopcodeMatrix.from_rows([[0, 1], [1, 1], [1, 2]])).graph   # P_3
    """
    values = tuple(m.vertex_values())
    index = {v: i for i, v in enumerate(values)}
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for i, (a, _, b) in enumerate(m.columns):
        if a == b:
            raise PreconditionError(f"column {i} has x = y = {a}; it would realize a loop")
        pair = tuple(sorted((index[a], index[b])))
        if pair in seen:
            raise PreconditionError(f"columns {seen[pair]} and {i} join the same values {a}, {b}; that is a multi-edge")
        seen[pair] = i
        edges.append(pair)
    g = Graph(len(values), tuple(edges))
    edge_colors = [0] * g.q
    for pair, c in zip(edges, m.e):
        edge_colors[g.edge_index[pair]] = c
    return Realization(g, values, Labeling(values, tuple(edge_colors)))


# =============================================================================
# Column algebra
# =============================================================================


def union_sum(*matrices: TopcodeMatrix) -> TopcodeMatrix:
    """Concatenate columns: M1 ⊎ M2 ⊎ ..."""
    if len(matrices) < 2:
        raise PreconditionError("union-sum needs at least two matrices")
    return _plain(c for m in matrices for c in m.columns)


def _remove(columns: Sequence[Column], doomed: Counter) -> list[Column]:
    left = Counter(doomed)
    out = []
    for c in columns:
        if left[c] > 0:
            left[c] -= 1
        else:
            out.append(c)
    return out


def subtract(m: TopcodeMatrix, sub: TopcodeMatrix) -> TopcodeMatrix:
    """M ∖ Msub: drop the first occurrence of every column of Msub."""
    have, drop = m.column_multiset(), sub.column_multiset()
    missing = drop - have
    if missing:
        raise PreconditionError(f"columns {sorted(missing.elements())} are not in the matrix")
    return _plain(_remove(m.columns, drop))


def intersect(m1: TopcodeMatrix, m2: TopcodeMatrix) -> TopcodeMatrix:
    """The largest common column sub-multiset, in M1's column order."""
    budget = m2.column_multiset()
    out = []
    for c in m1.columns:
        if budget[c] > 0:
            budget[c] -= 1
            out.append(c)
    return _plain(out)


def difference(m1: TopcodeMatrix, m2: TopcodeMatrix) -> TopcodeMatrix:
    """M1 ∖ (M1 ∩ M2): M1's columns without those it shares with M2."""
    return _plain(_remove(m1.columns, intersect(m1, m2).column_multiset()))


def union(m1: TopcodeMatrix, m2: TopcodeMatrix) -> TopcodeMatrix:
    """M1 ∪ M2 = M1 ⊎ (M2 ∖ (M1 ∩ M2))."""
    common = intersect(m1, m2)
    return _plain(m1.columns + _remove(m2.columns, common.column_multiset()))


def coincide(m1: TopcodeMatrix, m2: TopcodeMatrix, h: TopcodeMatrix) -> TopcodeMatrix:
    """[⊙H]<M1, M2> = (M1 ∖ H) ⊎ H ⊎ (M2 ∖ H)."""
    left, right = subtract(m1, h), subtract(m2, h)
    return _plain(left.columns + h.columns + right.columns)


def split(m: TopcodeMatrix, h: TopcodeMatrix) -> tuple[TopcodeMatrix, TopcodeMatrix]:
    """
    Undo ``coincide``: H must appear as a contiguous block of M's columns.

    Returns (left ⊎ H, H ⊎ right).
    """
    cols, block = m.columns, h.columns
    n = len(block)
    if n == 0:
        raise PreconditionError("cannot split along an empty sub-matrix")
    for start in range(len(cols) - n + 1):
        if cols[start : start + n] == block:
            return _plain(cols[:start] + block), _plain(block + cols[start + n :])
    raise PreconditionError("the sub-matrix is not a contiguous block of columns")


# =============================================================================
# Exchanges, standard form, dual
# =============================================================================


def _index(m: TopcodeMatrix, i: int) -> None:
    if not 0 <= i < m.q:
        raise PreconditionError(f"column {i} out of range for q = {m.q}")


def column_exchange(m: TopcodeMatrix, i: int, j: int) -> TopcodeMatrix:
    _index(m, i)
    _index(m, j)
    cols = m.columns
    cols[i], cols[j] = cols[j], cols[i]
    return TopcodeMatrix.from_columns(cols, m.valued)


def xy_exchange(m: TopcodeMatrix, i: int) -> TopcodeMatrix:
    _index(m, i)
    cols = m.columns
    a, c, b = cols[i]
    cols[i] = (b, c, a)
    # every edge rule is symmetric in x and y
    return TopcodeMatrix(tuple(c[0] for c in cols), tuple(c[1] for c in cols), tuple(c[2] for c in cols),
                         m.valued, m.modulus)


def standard_form(m: TopcodeMatrix) -> TopcodeMatrix:
    """
    Orient every column x < y, then sort columns by (e, x, y).

    Usage:
        standard_form(TopcodeMatrix.from_rows([[1, 0], [2, 1], [0, 3]])).rows()
        # [[0, 0], [1, 2], [3, 1]]
    """
    cols = []
    for i, (a, c, b) in enumerate(m.columns):
        if a == b:
            raise PreconditionError(f"column {i} has x = y = {a}; a standard Topcode-matrix has none")
        cols.append((min(a, b), c, max(a, b)))
    cols.sort(key=lambda col: (col[1], col[0], col[2]))
    return TopcodeMatrix(tuple(c[0] for c in cols), tuple(c[1] for c in cols), tuple(c[2] for c in cols),
                         m.valued, m.modulus)


def dual_matrix(m: TopcodeMatrix, edge_rule: str = "complement") -> TopcodeMatrix:
    """
    x -> M_v + m_v - x and y likewise (extremes over X and Y together);
    edges complemented as M_e + m_e - e or recomputed with the valued rule.
    """
    if m.q == 0:
        return m
    values = m.vertex_values()
    total = values[0] + values[-1]
    x = tuple(total - a for a in m.x)
    y = tuple(total - b for b in m.y)
    if edge_rule == "complement":
        top = max(m.e) + min(m.e)
        return TopcodeMatrix(x, tuple(top - c for c in m.e), y)
    if edge_rule == "recompute":
        if m.valued is None:
            raise PreconditionError("recomputing edges needs a valued matrix")
        rule = EDGE_RULES[m.valued]
        modulus = m.modulus or m.q
        return TopcodeMatrix(x, tuple(rule(a, b, modulus) for a, b in zip(x, y)), y, m.valued, m.modulus)
    raise PreconditionError(f"unknown edge rule {edge_rule!r}; expected complement or recompute")


# =============================================================================
# Arithmetic
# =============================================================================


def _same_shape(a: TopcodeMatrix, b: TopcodeMatrix) -> None:
    if a.q != b.q:
        raise MatrixShapeError(f"matrices have {a.q} and {b.q} columns")


def scale_add(a1: int, m1: TopcodeMatrix, a2: int = 0, m2: Optional[TopcodeMatrix] = None) -> TopcodeMatrix:
    """
    a1 M1 + a2 M2, elementwise; entries may go negative.

    Usage:
        scale_add(2, m)           # 2 M
        scale_add(1, m, -1, n)    # M - N
    """
    if m2 is None:
        m2 = TopcodeMatrix((0,) * m1.q, (0,) * m1.q, (0,) * m1.q)
    _same_shape(m1, m2)
    row = lambda r1, r2: tuple(a1 * u + a2 * v for u, v in zip(r1, r2))  # noqa: E731
    return TopcodeMatrix(row(m1.x, m2.x), row(m1.e, m2.e), row(m1.y, m2.y))


def merge(matrices: Sequence[TopcodeMatrix]) -> TopcodeMatrix:
    """
    Fill every cell from its single nonzero source (⊔).

    Raises MergeConflictError when two matrices are nonzero in the same cell.
    """
    if not matrices:
        raise PreconditionError("merge needs at least one matrix")
    first = matrices[0]
    for other in matrices[1:]:
        _same_shape(first, other)
    rows: list[list[int]] = [[0] * first.q for _ in range(3)]
    owner: dict[tuple[int, int], int] = {}
    for k, mat in enumerate(matrices):
        for r, row in enumerate(mat.rows()):
            for i, value in enumerate(row):
                if value == 0:
                    continue
                if (r, i) in owner:
                    raise MergeConflictError(f"cell ({r}, {i}) is nonzero in matrices {owner[(r, i)]} and {k}")
                owner[(r, i)] = k
                rows[r][i] = value
    log.debug("merged %d matrices of %d columns", len(matrices), first.q)
    return TopcodeMatrix(tuple(rows[0]), tuple(rows[1]), tuple(rows[2]))
