"""Every-zero graphic groups.

This module provides:
- GraphicGroup, build_group: the additive shift family f_r = f_1 + r (mod M)
  of one vertex coloring on a fixed host graph
- group_add, verify_group_laws: the every-zero operation and its law checks
- classify_spanning_tree_groups: shift orbits of the colored spanning trees
  of K_n

Members are indexed 0..M-1 internally; colors are kept in [1, M].
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .errors import PreconditionError, SizeLimitError
from .graph import DegreeSequence, Edge, Graph, complete, degree_sequence, spanning_tree_enumerate
from .labelings import Labeling, VerificationReport, Violation, induce_edge_colors
from .topcode import TopcodeMatrix

log = logging.getLogger(__name__)

CLASSIFY_MAX_N = 5


# =============================================================================
# Groups
# =============================================================================


@dataclass(frozen=True)
class GraphicGroup:
    """
    Shift family of ``base`` on ``host``: member r colors x with
    (base(x) + r - 1) mod M + 1 and recolors every edge with ``edge_rule``.

    Usage:
        grp = build_group(star(3), (1, 2, 3, 4), 4)
        grp.element(1).vertex        # (2, 3, 4, 1)
        grp.matrix(1).rows()         # [[2, 2, 2], [5, 6, 3], [3, 4, 1]]
    """

    host: Graph
    base: tuple[int, ...]
    modulus: int
    edge_rule: str = "plain-sum"

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError(f"group modulus must be positive, got {self.modulus}")
        if len(self.base) != self.host.p:
            raise PreconditionError(f"{len(self.base)} base colors for {self.host.p} vertices")

    def __len__(self) -> int:
        return self.modulus

    def _check(self, r: int) -> None:
        if not 0 <= r < self.modulus:
            raise PreconditionError(f"member index {r} outside [0, {self.modulus - 1}]")

    def wrap(self, c: int) -> int:
        return (c - 1) % self.modulus + 1

    def colors(self, r: int) -> tuple[int, ...]:
        self._check(r)
        return tuple(self.wrap(c + r) for c in self.base)

    def element(self, r: int) -> Labeling:
        vertex = self.colors(r)
        edge = induce_edge_colors(self.host, vertex, self.edge_rule, self.modulus)
        return Labeling(vertex, edge, kind=f"group-member-{r}")

    def elements(self) -> list[Labeling]:
        return [self.element(r) for r in range(self.modulus)]

    def matrix(self, r: int) -> TopcodeMatrix:
        """Columns follow the host's edge list; x is the color of the lower endpoint."""
        lab = self.element(r)
        vc, ec = lab.vertex_colors(), lab.edge_colors()
        return TopcodeMatrix.from_columns([(vc[u], c, vc[v]) for (u, v), c in zip(self.host.edges, ec)])

    def combine(self, i: int, j: int, zero: int) -> tuple[int, ...]:
        """Vertexwise f_i(x) + f_j(x) - f_k(x), reduced into [1, M]."""
        a, b, c = self.colors(i), self.colors(j), self.colors(zero)
        return tuple(self.wrap(x + y - z) for x, y, z in zip(a, b, c))


def build_group(g: Graph, f1: Sequence[int], modulus: int, edge_rule: str = "plain-sum") -> GraphicGroup:
    """The M members of the shift family of ``f1``; edge colors follow ``edge_rule``."""
    grp = GraphicGroup(g, tuple(f1), modulus, edge_rule)
    grp.element(0)
    log.debug("built graphic group of order %d on a (%d, %d)-graph", modulus, g.p, g.q)
    return grp


def group_add(grp: GraphicGroup, i: int, j: int, zero: int) -> int:
    """
    lambda = i + j - k (mod M) under the zero f_k.

    Usage:
        group_add(grp, 1, 2, 0)   # 3, the S_2 + S_3 = S_4 of the K_4 stars
    """
    lam = (i + j - zero) % grp.modulus
    if grp.combine(i, j, zero) != grp.colors(lam):
        raise PreconditionError(f"vertexwise identity fails for ({i}, {j}; zero {zero})")
    return lam


def verify_group_laws(grp: GraphicGroup) -> VerificationReport:
    """Check zero, inverse, closure and associativity vertexwise for every choice of zero."""
    m = grp.modulus
    members = {grp.colors(r): r for r in range(m)}
    violations: list[Violation] = []

    def add(i: int, j: int, k: int) -> int:
        combined = grp.combine(i, j, k)
        lam = members.get(combined)
        if lam is None:
            violations.append(Violation("closure", (i, j, k)))
            return (i + j - k) % m
        if lam != (i + j - k) % m:
            violations.append(Violation("uniqueness", (i, j, k, lam)))
        return lam

    for k in range(m):
        for i in range(m):
            if add(i, k, k) != i:
                violations.append(Violation("zero", (i, k)))
            if not any(grp.combine(i, j, k) == grp.colors(k) for j in range(m)):
                violations.append(Violation("inverse", (i, k)))
        for i, j, l in product(range(m), repeat=3):
            if add(add(i, j, k), l, k) != add(i, add(j, l, k), k):
                violations.append(Violation("associativity", (i, j, l, k)))
    return VerificationReport("every-zero-group", tuple(violations), {"order": m, "distinct": len(members)})


# =============================================================================
# Spanning-tree groups of K_n
# =============================================================================

ColoredTree = tuple[tuple[int, int], ...]


class TreeOrbit(NamedTuple):
    shape: str
    degrees: DegreeSequence
    size: int
    members: tuple[ColoredTree, ...]
    family: tuple[ColoredTree, ...]


def _shape(t: Graph) -> str:
    n = t.p
    degrees = degree_sequence(t)
    if n <= 2:
        return f"K_{n}"
    if degrees[0] == n - 1:
        return f"K_1,{n - 1}"
    if degrees[0] == 2:
        return f"P_{n}"
    return "T" + "".join(map(str, degrees))


def _colored(edges: Sequence[Edge], colors: Sequence[int]) -> ColoredTree:
    return tuple(sorted(tuple(sorted((colors[u], colors[v]))) for u, v in edges))


def _shift(tree: ColoredTree, r: int, n: int) -> ColoredTree:
    return tuple(sorted(tuple(sorted(((a + r - 1) % n + 1, (b + r - 1) % n + 1))) for a, b in tree))


def classify_spanning_tree_groups(n: int) -> list[TreeOrbit]:
    """
    Partition the n^(n-2) spanning trees of K_n, vertex i colored i + 1, into
    orbits under the color shift c -> c + r (mod n).

    Two members are equal when they carry the same set of colored edges. Each
    orbit also reports its full shift family f_0..f_{n-1}, repeats included.

    Usage:
        sorted(o.size for o in classify_spanning_tree_groups(4))  # [2, 2, 4, 4, 4]
    """
    if n < 1:
        raise PreconditionError(f"K_n needs n >= 1, got {n}")
    if n > CLASSIFY_MAX_N:
        raise SizeLimitError(f"spanning-tree group classification is limited to n <= {CLASSIFY_MAX_N}")
    colors = tuple(range(1, n + 1))
    if n == 1:
        return [TreeOrbit("K_1", (0,), 1, ((),), ((),))]

    seen: set[ColoredTree] = set()
    orbits = []
    for tree in spanning_tree_enumerate(complete(n)):
        key = _colored(tree.edges, colors)
        if key in seen:
            continue
        family = tuple(_shift(key, r, n) for r in range(n))
        members = tuple(dict.fromkeys(family))
        seen.update(members)
        orbits.append(TreeOrbit(_shape(tree), degree_sequence(tree), len(members), members, family))
    log.debug("K_%d: %d spanning trees in %d shift orbits", n, len(seen), len(orbits))
    return orbits
