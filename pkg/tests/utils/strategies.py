"""Hypothesis strategies for small graphs and matrices."""

from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from topocode.graph import Graph, from_prufer, path
from topocode.topcode import TopcodeMatrix


@st.composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 7) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def trees(draw, min_vertices: int = 2, max_vertices: int = 9) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    if n == 2:
        return path(2)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return from_prufer(seq)


@st.composite
def matrices(draw, max_q: int = 5, max_value: int = 9) -> TopcodeMatrix:
    q = draw(st.integers(1, max_q))
    row = st.lists(st.integers(0, max_value), min_size=q, max_size=q)
    return TopcodeMatrix(tuple(draw(row)), tuple(draw(row)), tuple(draw(row)))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h
