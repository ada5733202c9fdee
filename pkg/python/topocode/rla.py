"""Randomly-leaf-adding (RLA) extensions of labelings.

Each algorithm takes a bipartite graph G with a labeling of some kind and a
LeafPlan, attaches the planned leaves and returns a labeling of the same kind
on the (p+m, q+m)-graph. Outputs are verified before they are returned.

This module provides:
- LeafPlan: per-vertex leaf counts, explicit or seeded-random
- rla_odd_graceful
- rla_kd_harmonious, rla_kd_elegant, rla_kd_odd_elegant
- rla_kd_graceful_total, rla_e_image, rla_strongly_edge_magic
- partition_count, exact_partition_count, leaf_addition_count
- peel_layers, peeling_lower_bound
"""

import logging
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, NamedTuple, Optional, Sequence

from .config import Settings
from .errors import BudgetExceeded, ConstructionError, PreconditionError
from .graph import Graph, add_leaves, is_tree, leaf_indices, remove_vertices
from .labelings import Labeling, search_labeling, verify, verify_matching
from .labelings.verify import Check, kd_mod_sum

log = logging.getLogger(__name__)

Bipartition = Optional[tuple[Iterable[int], Iterable[int]]]


# =============================================================================
# Leaf plans
# =============================================================================


@dataclass(frozen=True)
class LeafPlan:
    """
    How many leaves to hang on each vertex.

    Usage:
        LeafPlan({0: 2, 3: 1})                  # explicit
        LeafPlan.random(g, m=4, seed=7)         # m leaves on random vertices
    """

    counts: Mapping[int, int]
    seed: Optional[int] = None

    def __post_init__(self):
        normal: dict[int, int] = {}
        for v, count in sorted(self.counts.items()):
            if count < 0:
                raise PreconditionError(f"leaf count for vertex {v} is negative")
            if count:
                normal[int(v)] = int(count)
        if not normal:
            raise PreconditionError("a leaf plan must add at least one leaf")
        object.__setattr__(self, "counts", dict(normal))

    @classmethod
    def random(cls, g: Graph, m: int, seed: Optional[int] = None) -> "LeafPlan":
        """Hang m leaves on vertices drawn uniformly, reproducibly under ``seed``."""
        if m < 1:
            raise PreconditionError(f"a leaf plan must add at least one leaf, got m={m}")
        if g.vertex_count == 0:
            raise PreconditionError("cannot add leaves to the empty graph")
        seed = Settings().seed if seed is None else seed
        rng = random.Random(seed)
        drawn = Counter(rng.randrange(g.vertex_count) for _ in range(m))
        return cls(dict(drawn), seed=seed)

    @property
    def m(self) -> int:
        return sum(self.counts.values())

    def count(self, v: int) -> int:
        return self.counts.get(v, 0)

    def apply(self, g: Graph) -> tuple[Graph, dict[int, list[int]]]:
        """The leaf-added graph and the new leaf indices of every planned vertex."""
        grown = add_leaves(g, self.counts)
        return grown, leaf_indices(g.vertex_count, self.counts)


# =============================================================================
# Shared scaffolding
# =============================================================================


class _Frame(NamedTuple):
    """Input sides sorted by color, and the grown graph with its leaves."""

    x: list[int]
    y: list[int]
    grown: Graph
    leaves: dict[int, list[int]]
    p: int

    @property
    def new_x(self) -> frozenset[int]:
        """X side of the grown graph: X plus the leaves hung on Y."""
        return frozenset(self.x) | {w for v in self.y for w in self.leaves.get(v, ())}

    @property
    def new_y(self) -> frozenset[int]:
        return frozenset(self.y) | {w for v in self.x for w in self.leaves.get(v, ())}

    @property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.new_x, self.new_y

    def old_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.grown.edges if e[1] < self.p]


def _frame(g: Graph, f: Labeling, plan: LeafPlan, kind: str, bipartition: Bipartition, **params: Any) -> _Frame:
    verify(g, f, kind, bipartition=bipartition, **params).raise_for_status()
    sides = Check(g, f, {}, bipartition).sides()
    if sides is None:
        raise PreconditionError("RLA algorithms need a bipartite graph")
    colors = f.vertex_colors()
    x = sorted(sides[0], key=lambda v: (colors[v], v))
    y = sorted(sides[1], key=lambda v: (colors[v], v))
    grown, leaves = plan.apply(g)
    log.debug("rla %s: %d leaves on %r", kind, plan.m, g)
    return _Frame(x, y, grown, leaves, g.vertex_count)


def _check_kd(k: int, d: int) -> None:
    if k < 0 or d < 1:
        raise PreconditionError(f"need k >= 0 and d >= 1, got ({k}, {d})")


def _done(frame: _Frame, lab: Labeling) -> tuple[Graph, Labeling]:
    verify(frame.grown, lab, bipartition=frame.bipartition).raise_for_status()
    return frame.grown, lab


# =============================================================================
# Odd-graceful
# =============================================================================


def rla_odd_graceful(
    g: Graph, f: Labeling, plan: LeafPlan, bipartition: Bipartition = None
) -> tuple[Graph, Labeling]:
    """
    Extend a set-ordered odd-graceful labeling over added leaves.

    Leaf edges on x_1, ..., x_s take 1, 3, ..., 2A-1 in turn; leaf edges on
    y_t, ..., y_1 take 2A+1, ..., 2m-1. X colors stay put, Y colors move up by
    2m, so old edge colors move up by 2m too.

    Usage:
        rla_odd_graceful(path(2), Labeling((0, 1)), LeafPlan({0: 1}))[1].vertex   # (0, 3, 1)
    """
    fr = _frame(g, f, plan, "set-ordered-odd-graceful", bipartition)
    colors = list(f.vertex_colors()) + [0] * plan.m
    m2 = 2 * plan.m
    for v in fr.y:
        colors[v] += m2
    nxt = 1
    for v in fr.x:
        for leaf in fr.leaves.get(v, ()):
            colors[leaf] = colors[v] + nxt
            nxt += 2
    for v in reversed(fr.y):
        for leaf in fr.leaves.get(v, ()):
            colors[leaf] = colors[v] - nxt
            nxt += 2
    return _done(fr, Labeling(tuple(colors), kind="odd-graceful"))


# =============================================================================
# Modular kinds: (k,d)-harmonious, (k,d)-elegant, (k,d)-odd-elegant
# =============================================================================


class _Residues:
    """
    Color new leaves so each edge residue (a + b - k) mod M hits a target
    set exactly once.

    Old edges keep the residues of the base colors; the leftover targets go
    to the leaf edges. Leaves are tried in order and the free residues
    cyclically from the first one after a used residue, so with no clash the
    first assignment is the straight fill. When the old residues form one
    cyclic run (bases carried from set-ordered graceful labelings) and the
    X and Y color classes cannot meet, the straight fill never clashes.
    """

    def __init__(
        self,
        fr: _Frame,
        base: Sequence[int],
        *,
        k: int,
        modulus: int,
        targets: Iterable[int],
        hi: int,
        injective: bool,
        allowed: Callable[[int, int], bool],
        budget: int,
    ):
        self.fr, self.base = fr, base
        self.k, self.modulus, self.hi = k, modulus, hi
        self.targets = sorted(set(targets))
        self.injective, self.allowed = injective, allowed
        self.budget, self.nodes = budget, 0
        self.backtracked = False

    def run(self) -> Optional[list[int]]:
        if self.injective and len(set(self.base)) != len(self.base):
            return None
        used: set[int] = set()
        for u, v in self.fr.old_edges():
            r = (self.base[u] + self.base[v] - self.k) % self.modulus
            if r in used or r not in self.targets:
                return None
            used.add(r)
        starts = [i for i, r in enumerate(self.targets) if r not in used and self.targets[i - 1] in used]
        first = starts[0] if starts else 0
        cyclic = self.targets[first:] + self.targets[:first]
        self.free = [r for r in cyclic if r not in used]
        self.order = [(v, leaf) for v in reversed(self.fr.y) for leaf in self.fr.leaves.get(v, ())]
        self.order += [(v, leaf) for v in reversed(self.fr.x) for leaf in self.fr.leaves.get(v, ())]
        self.colors = list(self.base) + [0] * len(self.order)
        self.taken = set(self.base)
        self.spent: set[int] = set()
        return self.colors if self._place(0) else None

    def _place(self, i: int) -> bool:
        if i == len(self.order):
            return True
        parent, leaf = self.order[i]
        for r in self.free:
            if r in self.spent:
                continue
            start = (r + self.k - self.colors[parent]) % self.modulus
            for c in range(start, self.hi + 1, self.modulus):
                if not self.allowed(leaf, c) or (self.injective and c in self.taken):
                    continue
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExceeded(f"leaf coloring exceeded {self.budget} nodes", nodes=self.nodes)
                self.colors[leaf] = c
                self.spent.add(r)
                self.taken.add(c)
                if self._place(i + 1):
                    return True
                self.spent.discard(r)
                self.taken.discard(c)
                self.backtracked = True
        return False


def _modular(
    fr: _Frame,
    f: Labeling,
    kind: str,
    k: int,
    d: int,
    *,
    odd: bool,
    injective: bool,
    shifts: Sequence[int],
    allowed: Callable[[int, int], bool] = lambda leaf, c: True,
) -> Labeling:
    q2 = fr.grown.q
    factor = 2 if odd else 1
    modulus = factor * q2 * d
    targets = [(2 * i + 1) * d for i in range(q2)] if odd else [i * d for i in range(q2)]
    hi = k + (factor * q2 - 1) * d
    budget = Settings().search_budget
    ys = set(fr.y)
    original = f.vertex_colors()
    for shift in shifts:
        base = [c + shift if v in ys else c for v, c in enumerate(original)]
        filler = _Residues(fr, base, k=k, modulus=modulus, targets=targets, hi=hi,
                           injective=injective, allowed=allowed, budget=budget)
        try:
            colors = filler.run()
        except BudgetExceeded as e:
            log.info("rla %s: shift %d gave up after %d nodes", kind, shift, e.nodes)
            colors = None
        if colors is not None:
            log.debug("rla %s: filled with Y shift %d", kind, shift)
            rule = kd_mod_sum(k, modulus)
            edges = tuple(rule(colors[u], colors[v]) for u, v in fr.grown.edges)
            fill = "backtrack" if filler.backtracked else "direct"
            return Labeling(tuple(colors), edges, kind=kind, params={"k": k, "d": d, "fill": fill})

    log.info("rla %s: direct fill failed, searching the grown graph", kind)
    try:
        found = search_labeling(fr.grown, kind, bipartition=fr.bipartition, k=k, d=d)
    except BudgetExceeded as e:
        raise ConstructionError(f"no {kind} extension found within the search budget") from e
    if found is None:
        raise ConstructionError(f"the grown graph admits no {kind} labeling")
    rule = kd_mod_sum(k, modulus)
    return found.with_edges(rule(found.vertex[u], found.vertex[v]) for u, v in fr.grown.edges).with_kind(kind, k=k, d=d, fill="search")


def rla_kd_harmonious(
    g: Graph, f: Labeling, plan: LeafPlan, k: int, d: int, bipartition: Bipartition = None
) -> tuple[Graph, Labeling]:
    """
    Extend a (k,d)-harmonious labeling over added leaves.

    Y colors move up by md first; the residues the old edges leave free go to
    the leaf edges from y_t down to x_1, and each leaf takes the smallest
    unused color giving its residue. Falls back to a bounded search on the
    grown graph when the shifted colors collide; params["fill"] says which
    path ran ("direct", "backtrack" or "search").
    """
    _check_kd(k, d)
    fr = _frame(g, f, plan, "kd-harmonious", bipartition, k=k, d=d)
    lab = _modular(fr, f, "kd-harmonious", k, d, odd=False, injective=True, shifts=(plan.m * d, 0))
    return _done(fr, lab)


def rla_kd_elegant(
    g: Graph, f: Labeling, plan: LeafPlan, k: int, d: int, bipartition: Bipartition = None
) -> tuple[Graph, Labeling]:
    """
    Extend a (k,d)-elegant labeling over added leaves.

    Old colors are kept. Leaf edges on y_t, ..., y_1 and then x_s, ..., x_1
    take the free residues in ascending order; leaves of X land on
    k + {0, d, ...} and leaves of Y on {0, d, ...}.

    Usage:
        g2, beta = rla_kd_elegant(star(3), alpha, LeafPlan({1: 2}), k=1, d=2)
    """
    _check_kd(k, d)
    fr = _frame(g, f, plan, "kd-elegant", bipartition, k=k, d=d)
    top = (fr.grown.q - 1) * d
    new_x = fr.new_x

    def lattice(leaf: int, c: int) -> bool:
        if leaf in new_x:
            return c % d == 0 and c <= top
        return c >= k and (c - k) % d == 0 and c - k <= top

    lab = _modular(fr, f, "kd-elegant", k, d, odd=False, injective=False, shifts=(0, plan.m * d), allowed=lattice)
    return _done(fr, lab)


def rla_kd_odd_elegant(
    g: Graph, f: Labeling, plan: LeafPlan, k: int, d: int, bipartition: Bipartition = None
) -> tuple[Graph, Labeling]:
    """Same steps as rla_kd_elegant over the odd residues {d, 3d, ..., (2q-1)d} mod 2qd."""
    _check_kd(k, d)
    fr = _frame(g, f, plan, "kd-odd-elegant", bipartition, k=k, d=d)
    lab = _modular(fr, f, "kd-odd-elegant", k, d, odd=True, injective=True, shifts=(0, 2 * plan.m * d))
    return _done(fr, lab)


# =============================================================================
# (k,d)-gracefully total and the colorings built on it
# =============================================================================


def _graceful_total(
    g: Graph,
    f: Labeling,
    plan: LeafPlan,
    k: int,
    d: int,
    order: Optional[Sequence[int]],
    bipartition: Bipartition,
) -> tuple[_Frame, Labeling]:
    _check_kd(k, d)
    if k < 1:
        raise PreconditionError("(k,d)-gracefully total colorings need k >= 1")
    fr = _frame(g, f, plan, "kd-gracefully-total", bipartition, k=k, d=d)
    m = plan.m
    order = list(range(m)) if order is None else [int(i) for i in order]
    if sorted(order) != list(range(m)):
        raise PreconditionError(f"perm must be a permutation of 0..{m - 1}, got {order}")

    colors = list(f.vertex_colors()) + [0] * m
    xs = set(fr.x)
    for u, v in g.edges:
        x, y = (u, v) if u in xs else (v, u)
        if colors[y] < colors[x]:
            raise PreconditionError(f"edge {(u, v)} has f(y) < f(x); colors must increase from X to Y")
    for v in fr.y:
        colors[v] += m * d

    added = [(v, leaf) for v in fr.x + fr.y for leaf in fr.leaves.get(v, ())]
    leaf_edge: dict[int, int] = {}
    for r, i in enumerate(order):
        v, leaf = added[i]
        e = k + r * d
        colors[leaf] = colors[v] + e if v in xs else colors[v] - e
        leaf_edge[leaf] = e
    edges = tuple(
        leaf_edge[v] if v >= fr.p else f.edge_color(g, u, v) + m * d
        for u, v in fr.grown.edges
    )
    lab = Labeling(tuple(colors), edges, kind="kd-gracefully-total", params={"k": k, "d": d})
    _done(fr, lab)
    return fr, lab


def rla_kd_graceful_total(
    g: Graph,
    f: Labeling,
    plan: LeafPlan,
    k: int,
    d: int,
    perm: Optional[Sequence[int]] = None,
    bipartition: Bipartition = None,
) -> tuple[Graph, Labeling]:
    """
    Extend a (k,d)-gracefully total coloring over added leaves.

    Y colors and old edge colors move up by md. The new edges, listed as the
    leaf edges of x_1, ..., x_s then y_1, ..., y_t, are visited in ``perm``
    order and colored k, k+d, ..., k+(m-1)d. Every permutation gives a valid
    coloring, so a plan of m leaves yields m! of them.

    Usage:
        rla_kd_graceful_total(path(2), Labeling((0, 1), (1,)), LeafPlan({0: 1}), 1, 1)
    """
    fr, lab = _graceful_total(g, f, plan, k, d, perm, bipartition)
    return fr.grown, lab


class EImage(NamedTuple):
    graph: Graph
    labeling: Labeling
    image: Labeling
    constant: int
    reflection: int


def rla_e_image(
    g: Graph,
    f: Labeling,
    plan: LeafPlan,
    k: int,
    d: int,
    perm: Optional[Sequence[int]] = None,
    bipartition: Bipartition = None,
) -> EImage:
    """
    A (k,d)-gracefully total coloring g' of the grown graph with its e-image h.

    h(x) = max g'(X) + min g'(X) - g'(x) and h(y) likewise over Y. Edges take
    h(e) = 2k + (q-1)d - g'(e), so h(E) is g'(E) reversed and g'(e) + h(e)
    is the constant 2k + (q-1)d. ``reflection`` is
    max g'(Y) + min g'(Y) - max g'(X) - min g'(X), the sum h(y) - h(x) + g'(e);
    it equals the constant when g' is set-ordered with min g'(Y) - max g'(X) = k
    and max g'(Y) - min g'(X) = k + (q-1)d.

    Usage:
        rla_e_image(path(2), Labeling((0, 1), (1,)), LeafPlan({0: 1}), 1, 1).constant   # 3
    """
    fr, lab = _graceful_total(g, f, plan, k, d, perm, bipartition)
    xs, ys = fr.bipartition
    vc = lab.vertex_colors()
    rx = max(vc[v] for v in xs) + min(vc[v] for v in xs)
    ry = max(vc[v] for v in ys) + min(vc[v] for v in ys)
    hv = tuple(rx - c if v in xs else ry - c for v, c in enumerate(vc))
    total = 2 * k + (fr.grown.q - 1) * d
    image = Labeling(hv, tuple(total - e for e in lab.edge_colors()), kind="kd-gracefully-e-image", params={"k": k, "d": d})
    verify(fr.grown, image).raise_for_status()
    verify_matching(fr.grown, lab, fr.grown, image, "e-image", k=total).raise_for_status()
    return EImage(fr.grown, lab, image, total, ry - rx)


def rla_strongly_edge_magic(
    g: Graph,
    f: Labeling,
    plan: LeafPlan,
    k: int,
    d: int,
    perm: Optional[Sequence[int]] = None,
    bipartition: Bipartition = None,
) -> tuple[Graph, Labeling]:
    """
    Strongly edge-magic (k,d)-total coloring of the grown graph.

    From the grown (k,d)-gracefully total g': X colors become
    max g'(X) + min g'(X) - g'(x), Y colors stay, and edges become
    max g'(E) + min g'(E) - g'(e). The magic constant
    max g'(X) + min g'(X) + max g'(E) + min g'(E) is kept in params["magic"].
    """
    fr, lab = _graceful_total(g, f, plan, k, d, perm, bipartition)
    xs = fr.new_x
    vc, ec = lab.vertex_colors(), lab.edge_colors()
    rx = max(vc[v] for v in xs) + min(vc[v] for v in xs)
    re = max(ec) + min(ec)
    vertex = tuple(rx - c if v in xs else c for v, c in enumerate(vc))
    edges = tuple(re - e for e in ec)
    magic = rx + re
    out = Labeling(vertex, edges, kind="strongly-edge-magic-kd-total", params={"k": k, "d": d, "magic": magic})
    log.debug("strongly edge-magic constant %d", magic)
    return _done(fr, out)


# =============================================================================
# Counting
# =============================================================================


def partition_count(m: int, k: int) -> int:
    """
    A(m, k): partitions of m into parts of size at most k.

    A(m, k) = A(m, k-1) + A(m-k, k) with A(0, k) = 1 and A(m, 0) = 0 for m > 0.

    Usage:
        partition_count(4, 2)   # 3
        partition_count(5, 5)   # 7
    """
    if m < 0 or k < 0:
        raise PreconditionError(f"partition_count needs m, k >= 0, got ({m}, {k})")
    ways = [1] + [0] * m
    for part in range(1, min(k, m) + 1):
        for total in range(part, m + 1):
            ways[total] += ways[total - part]
    return ways[m]


def exact_partition_count(m: int, k: int) -> int:
    """P(m, k) = A(m, k) - A(m, k-1): partitions of m into exactly k parts."""
    if k == 0:
        return 1 if m == 0 else 0
    return partition_count(m, k) - partition_count(m, k - 1)


def leaf_addition_count(p: int, m: int) -> int:
    """
    Ways to add m leaves to a p-vertex graph: the sum over k of
    p!/(p-k)! * P(m, k) * k!. Terms with k > p contribute 0.
    """
    if p < 0 or m < 0:
        raise PreconditionError(f"leaf_addition_count needs p, m >= 0, got ({p}, {m})")
    return sum(math.perm(p, k) * exact_partition_count(m, k) * math.factorial(k) for k in range(1, m + 1))


def _is_star(t: Graph) -> bool:
    p = t.vertex_count
    return p <= 2 or any(t.degree(v) == p - 1 for v in t.vertices)


def peel_layers(t: Graph) -> list[int]:
    """Leaf counts c_0, c_1, ... removed layer by layer until a star is left."""
    if not is_tree(t):
        raise PreconditionError("peeling is defined on trees")
    layers = []
    while not _is_star(t):
        leaves = t.leaves()
        layers.append(len(leaves))
        t = remove_vertices(t, leaves).graph
    return layers


def peeling_lower_bound(t: Graph) -> int:
    """
    (c_0)! (c_1)! ... (c_{n-2})!: how many distinct (k,d)-gracefully total
    colorings the RLA chain from the final star guarantees at least.
    """
    bound = 1
    for c in peel_layers(t)[:-1]:
        bound *= math.factorial(c)
    return bound
