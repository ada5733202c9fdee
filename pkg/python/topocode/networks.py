"""Self-similar trees built by the leaf algorithms.

This module provides:
- SelfSimilarSpec: base tree, root (algorithm A) and iteration count
- leaf_algo_a: copies of the previous tree hang from the neighbors of the
  base's non-root leaves, glued at their root
- leaf_algo_b: as A without a root; every leaf is replaced and each copy is
  glued at its vertex 0
- leaf_algo_c: the tree itself is the base of the next step
- self_similar_order: the closed-form vertex count of A and B

Iteration counts start at 1: one iteration glues copies of the base onto the
base. Under that reading the closed form satisfies v_t = v - 2m + m v_{t-1}
with v_0 = v.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import ConstructionError, PreconditionError, SizeLimitError
from .graph import Graph, is_tree, remove_vertices

log = logging.getLogger(__name__)

SIZE_CAP = 10**6


class SelfSimilarCounts(NamedTuple):
    vertices: int
    edges: int
    closed_form_vertices: Optional[int] = None
    closed_form_edges: Optional[int] = None

    @property
    def matches_closed_form(self) -> Optional[bool]:
        if self.closed_form_vertices is None:
            return None
        return self.vertices == self.closed_form_vertices and self.edges == self.closed_form_edges


@dataclass(frozen=True)
class SelfSimilarSpec:
    """
    Usage:
        spec = SelfSimilarSpec(path(3), t=1, root=0)
        leaf_algo_a(spec)[0].edges   # ((0, 1), (1, 2), (2, 3))
    """

    base: Graph
    t: int = 1
    root: Optional[int] = None

    def __post_init__(self):
        if not is_tree(self.base):
            raise PreconditionError("the base of a self-similar tree must be a tree")
        if self.base.p < 3:
            raise PreconditionError(f"the base needs at least 3 vertices, got {self.base.p}")
        if self.t < 1:
            raise PreconditionError(f"iteration count must be at least 1, got {self.t}")
        if self.root is not None and not 0 <= self.root < self.base.p:
            raise PreconditionError(f"root {self.root} is not a vertex of the base")


def self_similar_order(v: int, m: int, t: int) -> int:
    """v m^t + (v - 2m)(1 + m + ... + m^(t-1))."""
    return v * m**t + (v - 2 * m) * sum(m**k for k in range(t))


def _graft(base: Graph, doomed: Sequence[int], copy: Graph, anchor: int) -> Graph:
    """
    Delete each leaf in ``doomed`` and glue one copy of ``copy`` onto that
    leaf's neighbor, identifying the copy's ``anchor`` with the neighbor.
    """
    trimmed, remap = remove_vertices(base, doomed)
    edges = list(trimmed.edges)
    nxt = trimmed.p
    for leaf in doomed:
        (at,) = base.neighbors(leaf)
        local = []
        for w in copy.vertices:
            if w == anchor:
                local.append(remap[at])
            else:
                local.append(nxt)
                nxt += 1
        edges.extend((local[a], local[b]) for a, b in copy.edges)
    return Graph(nxt, tuple(edges))


def _check_cap(v: int) -> None:
    if v > SIZE_CAP:
        raise SizeLimitError(f"self-similar tree would have {v} vertices, over the cap of {SIZE_CAP}")


def leaf_algo_a(spec: SelfSimilarSpec) -> tuple[Graph, SelfSimilarCounts]:
    """
    Rooted construction: N_t is the base with its non-root leaves deleted and
    a copy of N_{t-1} glued by its root onto each deleted leaf's neighbor.
    """
    if spec.root is None:
        raise PreconditionError("leaf algorithm A needs a root")
    base = spec.base
    doomed = [v for v in base.leaves() if v != spec.root]
    if not doomed:
        raise PreconditionError("the base has no leaf other than the root")
    m = len(doomed)
    expected = self_similar_order(base.p, m, spec.t)
    _check_cap(expected)

    _, remap = remove_vertices(base, doomed)
    tree, root = base, spec.root
    for step in range(spec.t):
        tree = _graft(base, doomed, tree, root)
        root = remap[spec.root]
        log.debug("leaf algorithm A step %d: %d vertices", step + 1, tree.p)
    return tree, SelfSimilarCounts(tree.p, tree.q, expected, expected - 1)


def leaf_algo_b(spec: SelfSimilarSpec) -> tuple[Graph, SelfSimilarCounts]:
    """
    Unrooted construction: every leaf of the base is deleted and a copy of the
    previous tree is glued by its vertex 0 onto the leaf's neighbor.
    """
    base = spec.base
    doomed = base.leaves()
    n = len(doomed)
    expected = self_similar_order(base.p, n, spec.t)
    _check_cap(expected)

    tree = base
    for step in range(spec.t):
        tree = _graft(base, doomed, tree, 0)
        log.debug("leaf algorithm B step %d: %d vertices", step + 1, tree.p)
    return tree, SelfSimilarCounts(tree.p, tree.q, expected, expected - 1)


def leaf_algo_c(spec: SelfSimilarSpec) -> tuple[Graph, SelfSimilarCounts]:
    """
    Evolving construction: G_k is G_{k-1} with its leaves deleted and a copy of
    G_{k-1} glued by vertex 0 onto each deleted leaf's neighbor.

    No closed form is reported; the result is checked to be a tree.
    """
    tree = spec.base
    for step in range(spec.t):
        doomed = tree.leaves()
        m = len(doomed)
        _check_cap(tree.p * (m + 1) - 2 * m)
        tree = _graft(tree, doomed, tree, 0)
        log.debug("leaf algorithm C step %d: %d leaves replaced, %d vertices", step + 1, m, tree.p)
    if not is_tree(tree):
        raise ConstructionError("leaf algorithm C produced a non-tree")
    return tree, SelfSimilarCounts(tree.p, tree.q)


LEAF_ALGORITHMS = {"a": leaf_algo_a, "b": leaf_algo_b, "c": leaf_algo_c}
