"""Simple undirected graphs and the structural operations built on them.

Vertices are dense 0-based indices. Operations that renumber vertices return a
GraphEdit whose ``remap`` sends every old index to its new index (or None when
the vertex was deleted), so labelings can be carried across.

This module provides:
- Graph, GraphEdit, TreeReport
- degree_sequence, vertex_split, vertex_coincide, edge_split, edge_coincide
- add_leaves, edge_swap, remove_vertices, disjoint_union
- is_tree, isomorphic, spanning_tree_count, spanning_tree_enumerate
- constructors: path, cycle, star, complete, complete_bipartite, caterpillar,
  random_caterpillar, from_prufer
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

import networkx as nx
import sympy

from .errors import InvalidGraphError, PreconditionError, SizeLimitError

log = logging.getLogger(__name__)

Edge = tuple[int, int]
DegreeSequence = tuple[int, ...]

ISOMORPHISM_LIMIT = 10
ENUMERATION_LIMIT = 8


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# =============================================================================
# Graph
# =============================================================================


@dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph.

    The edge list is canonical: every pair is sorted and the list itself is
    sorted, so two graphs with the same edge set compare equal.

    Usage:
        g = Graph(4, [(0, 1), (2, 1), (2, 3)])
        g.q          # 3
        g.neighbors(1)  # frozenset({0, 2})
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {self.vertex_count}")
        seen: set[Edge] = set()
        for raw in self.edges:
            u, v = (int(x) for x in raw)
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")
            e = canonical_edge(u, v)
            if e in seen:
                raise InvalidGraphError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.names is not None:
            names = tuple(str(n) for n in self.names)
            if len(names) != self.vertex_count:
                raise InvalidGraphError(f"{len(names)} names for {self.vertex_count} vertices")
            object.__setattr__(self, "names", names)

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_index

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if len(self.adjacency[v]) == 1]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        return sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """
        Two-color the graph, or None if it has an odd cycle.

        The smallest vertex of every component lands in the first part, which
        makes the answer unique for connected graphs.
        """
        h = self.to_networkx()
        if not nx.is_bipartite(h):
            return None
        side = nx.bipartite.color(h)
        x = frozenset(v for comp in self.components() for v in comp if side[v] == side[comp[0]])
        return x, frozenset(self.vertices) - x

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edges)
        return h

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename vertex v to perm[v]."""
        if sorted(perm) != list(self.vertices):
            raise PreconditionError("relabel needs a permutation of the vertex indices")
        return Graph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise PreconditionError(f"vertex {v} not in graph with {self.vertex_count} vertices")

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q}, edges={list(self.edges)})"


class GraphEdit(NamedTuple):
    """Result of an operation that renumbers vertices."""

    graph: Graph
    remap: tuple[Optional[int], ...]


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(sorted((len(a) for a in g.adjacency), reverse=True))


# =============================================================================
# Split / coincide
# =============================================================================


def vertex_split(g: Graph, v: int, part_a: Iterable[int]) -> GraphEdit:
    """
    Split v into v' (keeps index v, neighbors part_a) and v'' (new last index,
    the remaining neighbors).
    """
    nbrs = g.neighbors(v)
    part = frozenset(part_a)
    if len(nbrs) < 2:
        raise PreconditionError(f"vertex {v} has degree {len(nbrs)}; splitting needs degree >= 2")
    if not part or part == nbrs:
        raise PreconditionError("part_a must be a nonempty proper subset of N(v)")
    if not part <= nbrs:
        raise PreconditionError(f"part_a {sorted(part)} is not a subset of N({v}) = {sorted(nbrs)}")
    new = g.vertex_count
    edges = [e for e in g.edges if v not in e]
    edges += [(v, w) for w in part]
    edges += [(new, w) for w in nbrs - part]
    return GraphEdit(Graph(g.vertex_count + 1, tuple(edges)), tuple(g.vertices))


def _check_coincidable(g: Graph, u: int, v: int, ignore: frozenset[int] = frozenset()) -> None:
    if u == v:
        raise PreconditionError("cannot coincide a vertex with itself")
    if g.has_edge(u, v):
        raise PreconditionError(f"vertices {u} and {v} are adjacent; coinciding them makes a loop")
    shared = (g.neighbors(u) & g.neighbors(v)) - ignore
    if shared:
        raise PreconditionError(f"vertices {u} and {v} share neighbors {sorted(shared)}; coinciding them makes a multi-edge")


def _collapse(g: Graph, merges: Mapping[int, int]) -> GraphEdit:
    """Fold each key of ``merges`` into its value and renumber densely."""
    removed = sorted(merges)
    remap: list[Optional[int]] = []
    for w in g.vertices:
        target = merges.get(w, w)
        shift = sum(1 for r in removed if r < target)
        remap.append(target - shift)
    edges = {canonical_edge(remap[a], remap[b]) for a, b in g.edges}
    return GraphEdit(Graph(g.vertex_count - len(removed), tuple(edges)), tuple(remap))


def vertex_coincide(g: Graph, u: int, v: int) -> GraphEdit:
    """Merge u and v into one vertex at index min(u, v); higher indices shift down."""
    _check_coincidable(g, u, v)
    keep, drop = min(u, v), max(u, v)
    return _collapse(g, {drop: keep})


def edge_split(
    g: Graph,
    edge: Edge,
    part_u: Iterable[int],
    part_v: Iterable[int],
    allow_leaf: bool = False,
) -> GraphEdit:
    """
    Split edge uv into u'v' and u''v''.

    ``part_u`` is the subset of N(u) - {v} kept by u' (index u); u'' gets the
    rest and the new index p. Likewise ``part_v`` for v' (index v) and v''
    (index p + 1). Unless ``allow_leaf`` is set, both parts must be nonempty
    proper subsets so that no split end becomes a leaf.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    for end in (u, v):
        if g.degree(end) < 2:
            raise PreconditionError(f"endpoint {end} has degree {g.degree(end)}; edge splitting needs degree >= 2")
    rest_u, rest_v = g.neighbors(u) - {v}, g.neighbors(v) - {u}
    pu, pv = frozenset(part_u), frozenset(part_v)
    for end, part, rest in ((u, pu, rest_u), (v, pv, rest_v)):
        if not part <= rest:
            raise PreconditionError(f"part {sorted(part)} is not a subset of the other neighbors of {end}")
        if not allow_leaf and (not part or part == rest):
            raise PreconditionError(f"splitting {end} with part {sorted(part)} leaves a leaf; pass allow_leaf=True to permit it")
    u2, v2 = g.vertex_count, g.vertex_count + 1
    edges = [e for e in g.edges if u not in e and v not in e]
    edges += [(u, w) for w in pu] + [(u2, w) for w in rest_u - pu]
    edges += [(v, w) for w in pv] + [(v2, w) for w in rest_v - pv]
    edges += [(u, v), (u2, v2)]
    return GraphEdit(Graph(g.vertex_count + 2, tuple(edges)), tuple(g.vertices))


def edge_coincide(g: Graph, e1: Edge, e2: Edge) -> GraphEdit:
    """Merge edge (u1, v1) with (u2, v2), pairing u1 with u2 and v1 with v2."""
    (u1, v1), (u2, v2) = e1, e2
    for a, b in (e1, e2):
        if not g.has_edge(a, b):
            raise PreconditionError(f"({a}, {b}) is not an edge")
    if len({u1, v1, u2, v2}) != 4:
        raise PreconditionError("edges to coincide must be vertex-disjoint")
    if g.has_edge(u1, v2) or g.has_edge(u2, v1):
        raise PreconditionError("crossing adjacency between the two edges would make a multi-edge")
    _check_coincidable(g, u1, u2, ignore=frozenset({v1, v2}))
    _check_coincidable(g, v1, v2, ignore=frozenset({u1, u2}))
    merges = {max(u1, u2): min(u1, u2), max(v1, v2): min(v1, v2)}
    return _collapse(g, merges)


# =============================================================================
# Leaves, edge swap, unions
# =============================================================================


def leaf_indices(p: int, plan: Mapping[int, int]) -> dict[int, list[int]]:
    """Indices add_leaves assigns: appended after p in plan iteration order."""
    out: dict[int, list[int]] = {}
    nxt = p
    for v, count in plan.items():
        out[v] = list(range(nxt, nxt + count))
        nxt += count
    return out


def add_leaves(g: Graph, plan: Mapping[int, int]) -> Graph:
    """Attach plan[v] new leaves to every planned vertex v."""
    for v, count in plan.items():
        g._check_vertex(v)
        if count < 0:
            raise PreconditionError(f"leaf count for vertex {v} is negative")
    layout = leaf_indices(g.vertex_count, plan)
    extra = [(v, leaf) for v, leaves in layout.items() for leaf in leaves]
    return Graph(g.vertex_count + len(extra), g.edges + tuple(extra))


def edge_swap(g: Graph, remove: Edge, add: Edge) -> Graph:
    """G - xy + uv: same vertex and edge counts."""
    rem, new = canonical_edge(*remove), canonical_edge(*add)
    if rem not in g.edge_index:
        raise PreconditionError(f"{rem} is not an edge")
    if new[0] == new[1]:
        raise PreconditionError("added pair is a loop")
    if new == rem or new in g.edge_index:
        raise PreconditionError(f"{new} is already an edge")
    g._check_vertex(new[0])
    g._check_vertex(new[1])
    return Graph(g.vertex_count, tuple(e for e in g.edges if e != rem) + (new,))


def remove_vertices(g: Graph, doomed: Iterable[int]) -> GraphEdit:
    gone = set(doomed)
    remap: list[Optional[int]] = []
    nxt = 0
    for v in g.vertices:
        if v in gone:
            remap.append(None)
        else:
            remap.append(nxt)
            nxt += 1
    edges = tuple((remap[u], remap[v]) for u, v in g.edges if u not in gone and v not in gone)
    return GraphEdit(Graph(nxt, edges), tuple(remap))  # type: ignore[arg-type]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """h's vertices are shifted by g.p."""
    shift = g.vertex_count
    return Graph(shift + h.vertex_count, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


# =============================================================================
# Trees
# =============================================================================


@dataclass(frozen=True)
class TreeReport:
    is_tree: bool
    connected: bool
    size_identity: bool
    leaf_count: int
    leaf_identity: bool

    def __bool__(self) -> bool:
        return self.is_tree


def is_tree(g: Graph) -> TreeReport:
    """
    Tree test plus the leaf identity n_1 = 2 - 2 n_0 + sum_{d>=3} (d - 2) n_d.

    The identity is reported separately. It holds for every tree, K_1 included
    through the n_0 term; a forest with c components gives 2c on the right
    instead of 2, so it fails there.
    """
    counts = Counter(len(a) for a in g.adjacency)
    rhs = 2 - 2 * counts.get(0, 0) + sum((d - 2) * n for d, n in counts.items() if d >= 3)
    connected = g.is_connected() and g.vertex_count > 0
    size_ok = g.vertex_count == g.q + 1
    return TreeReport(
        is_tree=connected and size_ok,
        connected=connected,
        size_identity=size_ok,
        leaf_count=counts.get(1, 0),
        leaf_identity=counts.get(1, 0) == rhs,
    )


# =============================================================================
# Isomorphism (brute force)
# =============================================================================


def isomorphism(g1: Graph, g2: Graph, limit: int = ISOMORPHISM_LIMIT) -> Optional[list[int]]:
    """Return a vertex bijection g1 -> g2 preserving adjacency, or None."""
    if max(g1.vertex_count, g2.vertex_count) > limit:
        raise SizeLimitError(f"brute-force isomorphism is limited to {limit} vertices")
    if g1.vertex_count != g2.vertex_count or g1.q != g2.q:
        return None
    if degree_sequence(g1) != degree_sequence(g2):
        return None

    n = g1.vertex_count
    order = sorted(g1.vertices, key=lambda v: -len(g1.adjacency[v]))
    mapping = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in g2.vertices:
            if used[w] or len(g2.adjacency[w]) != len(g1.adjacency[v]):
                continue
            if all(
                g2.has_edge(w, mapping[x]) == g1.has_edge(v, x)
                for x in order[:depth]
            ):
                mapping[v], used[w] = w, True
                if extend(depth + 1):
                    return True
                mapping[v], used[w] = -1, False
        return False

    return mapping if extend(0) else None


def isomorphic(g1: Graph, g2: Graph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    return isomorphism(g1, g2, limit) is not None


# =============================================================================
# Spanning trees
# =============================================================================


def laplacian(g: Graph) -> sympy.Matrix:
    lap = sympy.zeros(g.vertex_count, g.vertex_count)
    for v in g.vertices:
        lap[v, v] = len(g.adjacency[v])
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1
    return lap


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: determinant of the Laplacian with row/column 0 removed."""
    if not g.is_connected() or g.vertex_count == 0:
        raise PreconditionError("spanning trees are counted on connected graphs only")
    if g.vertex_count == 1:
        return 1
    minor = laplacian(g)[1:, 1:]
    return int(minor.det(method="bareiss"))


def spanning_tree_enumerate(g: Graph, limit: int = ENUMERATION_LIMIT) -> list[Graph]:
    """Every spanning tree, in lexicographic order of chosen edge indices."""
    if g.vertex_count > limit:
        raise SizeLimitError(f"spanning-tree enumeration is limited to {limit} vertices")
    if not g.is_connected() or g.vertex_count == 0:
        raise PreconditionError("spanning trees are enumerated on connected graphs only")
    need = g.vertex_count - 1
    edges = g.edges
    out: list[Graph] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(start: int, chosen: list[Edge], parent: list[int]) -> None:
        if len(chosen) == need:
            out.append(Graph(g.vertex_count, tuple(chosen)))
            return
        for i in range(start, len(edges) - (need - len(chosen)) + 1):
            u, v = edges[i]
            ru, rv = find(parent, u), find(parent, v)
            if ru == rv:
                continue
            child = parent.copy()
            child[ru] = rv
            chosen.append(edges[i])
            walk(i + 1, chosen, child)
            chosen.pop()

    walk(0, [], list(g.vertices))
    log.debug("enumerated %d spanning trees of %r", len(out), g)
    return out


# =============================================================================
# Constructors
# =============================================================================


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """K_{1,n} with center 0."""
    return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def caterpillar(legs: Sequence[int]) -> Graph:
    """A spine path of len(legs) vertices, spine vertex i carrying legs[i] leaves."""
    spine = path(len(legs))
    return add_leaves(spine, {i: c for i, c in enumerate(legs) if c})


def random_caterpillar(rng: random.Random, max_spine: int = 4, max_legs: int = 2) -> Graph:
    spine = rng.randint(1, max_spine)
    legs = [rng.randint(0, max_legs) for _ in range(spine)]
    if spine == 1 and legs[0] == 0:
        legs[0] = 1
    return caterpillar(legs)


def from_prufer(seq: Sequence[int]) -> Graph:
    """Decode a Pruefer sequence over 0..n-1 into a labeled tree on n = len(seq) + 2 vertices."""
    n = len(seq) + 2
    degree = [1] * n
    for a in seq:
        if not 0 <= a < n:
            raise PreconditionError(f"Pruefer entry {a} outside [0, {n})")
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = next(j for j in range(n) if degree[j] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (j for j in range(n) if degree[j] == 1)
    edges.append((u, v))
    return Graph(n, tuple(edges))


def iter_prufer_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n >= 2 vertices."""
    if n == 2:
        yield path(2)
        return
    for seq in product(range(n), repeat=n - 2):
        yield from_prufer(seq)
