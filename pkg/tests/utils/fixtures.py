"""Worked examples shared by the test modules."""

from topocode.graph import Graph, path, star
from topocode.labelings import Labeling
from topocode.topcode import TopcodeMatrix, realize

# Topcode-matrix of the 15-edge graph H_3164 with its set-ordered graceful labeling.
H3164_ROWS = [
    [8, 8, 8, 8, 7, 6, 5, 6, 5, 4, 3, 1, 0, 1, 0],
    list(range(1, 16)),
    [9, 10, 11, 12, 12, 12, 12, 14, 14, 14, 14, 13, 13, 15, 15],
]

# The same graph under the odd-graceful labeling: X doubled, E and Y sent to 2w - 1.
H3164_ODD_ROWS = [
    [2 * x for x in H3164_ROWS[0]],
    [2 * w - 1 for w in H3164_ROWS[1]],
    [2 * w - 1 for w in H3164_ROWS[2]],
]

# Segments the 65-digit string of H_3164 is cut into.
S3164_SEGMENTS = [
    9, 1, 10, 11, 2, 8, 8, 3, 12, 12, 4, 8, 8, 5, 12, 12, 6, 7, 6, 7, 14, 14, 8,
    5, 6, 9, 14, 14, 10, 5, 4, 11, 13, 13, 12, 3, 1, 13, 15, 15, 14, 0, 1, 15, 0,
]

# Stars of K_4, center colored r and leaves the other three colors, sum rule.
STAR_MATRICES = [
    [[1, 1, 1], [3, 4, 5], [2, 3, 4]],
    [[2, 2, 2], [5, 6, 3], [3, 4, 1]],
    [[3, 3, 3], [7, 4, 5], [4, 1, 2]],
    [[4, 4, 4], [5, 6, 7], [1, 2, 3]],
]

# Shift family of the path 1-2-3-4 under the sum rule, mod 4: (vertices, edges).
PATH_GROUP = [
    ((1, 2, 3, 4), (3, 5, 7)),
    ((2, 3, 4, 1), (5, 7, 5)),
    ((3, 4, 1, 2), (7, 5, 3)),
    ((4, 1, 2, 3), (5, 3, 5)),
]

# Union-sum worked example.
MATRIX_A = [[7, 5, 7, 1], [1, 3, 5, 7], [18, 18, 14, 18]]
MATRIX_B = [[7, 1, 5], [1, 7, 9], [18, 18, 12]]
A_UNION_SUM_B = [[7, 5, 7, 1, 7, 1, 5], [1, 3, 5, 7, 1, 7, 9], [18, 18, 14, 18, 18, 18, 12]]
A_UNION_B = [[7, 5, 7, 1, 5], [1, 3, 5, 7, 9], [18, 18, 14, 18, 12]]
A_INTERSECT_B = [[7, 1], [1, 7], [18, 18]]
A_MINUS_B = [[5, 7], [3, 5], [18, 14]]
B_MINUS_A = [[5], [9], [12]]

# (k, 1)-magic total labelings of P_7 for k = 2..12: (vertex colors, edge colors).
P7_MAGIC = {
    2: ((1, 3, 9, 6, 8, 5, 4), (2, 10, 13, 12, 11, 7)),
    3: ((5, 1, 4, 9, 7, 8, 6), (3, 2, 10, 13, 12, 11)),
    4: ((7, 9, 8, 2, 3, 5, 10), (12, 13, 6, 1, 4, 11)),
    5: ((1, 9, 7, 10, 8, 3, 4), (5, 11, 12, 13, 6, 2)),
    6: ((3, 5, 8, 10, 9, 1, 11), (2, 7, 12, 13, 4, 6)),
    7: ((3, 10, 9, 2, 13, 1, 11), (6, 12, 4, 8, 7, 5)),
    8: ((4, 12, 3, 10, 9, 1, 13), (8, 7, 5, 11, 2, 6)),
    9: ((6, 10, 8, 13, 1, 11, 2), (7, 9, 12, 5, 3, 4)),
    10: ((2, 13, 1, 12, 6, 11, 9), (5, 4, 3, 8, 7, 10)),
    11: ((4, 12, 1, 13, 9, 8, 10), (5, 2, 3, 11, 6, 7)),
    12: ((4, 11, 13, 8, 6, 7, 10), (3, 12, 9, 2, 1, 5)),
}


def h3164() -> tuple[Graph, Labeling]:
    """H_3164 realized from its matrix; vertex colors are the matrix values."""
    r = realize(TopcodeMatrix.from_rows(H3164_ROWS))
    return r.graph, r.labeling.with_kind("set-ordered-graceful")


def h3164_odd() -> tuple[Graph, Labeling]:
    g, f = h3164()
    vertex = tuple(2 * c if c <= 8 else 2 * c - 1 for c in f.vertex_colors())
    return g, Labeling(vertex, kind="set-ordered-odd-graceful")


def p4_graceful() -> tuple[Graph, Labeling]:
    return path(4), Labeling((0, 3, 1, 2), kind="set-ordered-graceful")


def star_s1() -> tuple[Graph, Labeling]:
    return star(3), Labeling((1, 2, 3, 4), (3, 4, 5))
