"""Transformations between labelings.

This module provides:
- dual: h'(z) = max h(S) + min h(S) - h(z)
- set_dual_transform, set_dual_matchings: the set-dual family of a set-ordered
  graceful labeling
- reciprocal_transform: permutation reversal within X, Y or all vertices
- magic_dual: duals of the four magic-family total colorings
- equivalent_labeling, odd_elegant_from_graceful, caterpillar_graceful:
  constructions of set-ordered labelings on trees
- graceful_join: gluing a set-ordered graceful graph to a graceful graph
- totally_kd_sequential
- multi_dimension_compose
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, NamedTuple, Optional, Sequence

from ..errors import PreconditionError
from ..graph import Graph, disjoint_union, edge_coincide, is_tree, vertex_coincide
from .kinds import Color, Labeling, induce_edge_colors
from .verify import Check, verify

log = logging.getLogger(__name__)

Bipartition = Optional[tuple[Iterable[int], Iterable[int]]]


# =============================================================================
# Helpers
# =============================================================================


class Sides(NamedTuple):
    x: list[int]
    y: list[int]
    colors: tuple[Color, ...]

    @property
    def max_x(self) -> int:
        return max(self.colors[v] for v in self.x)

    @property
    def min_x(self) -> int:
        return min(self.colors[v] for v in self.x)

    @property
    def max_y(self) -> int:
        return max(self.colors[v] for v in self.y)

    @property
    def min_y(self) -> int:
        return min(self.colors[v] for v in self.y)

    def top_x(self) -> int:
        """x_s, the X vertex with the largest color."""
        return max(self.x, key=lambda v: self.colors[v])

    def bottom_y(self) -> int:
        """y_1, the Y vertex with the smallest color."""
        return min(self.y, key=lambda v: self.colors[v])


def ordered_sides(g: Graph, lab: Labeling, bipartition: Bipartition = None) -> Sides:
    """The (X, Y) split of a set-ordered labeling; raises if it is not set-ordered."""
    c = Check(g, lab, {}, bipartition)
    sides = c.sides()
    if sides is None or not c.set_ordered():
        raise PreconditionError("labeling is not set-ordered on a bipartition of the graph")
    x, y = sides
    if not x or not y:
        raise PreconditionError("set-ordered transforms need both sides nonempty")
    return Sides(sorted(x), sorted(y), c.vc)


def _graceful_sides(g: Graph, f: Labeling, bipartition: Bipartition) -> Sides:
    verify(g, f, "set-ordered-graceful", bipartition=bipartition).raise_for_status()
    return ordered_sides(g, f, bipartition)


def _finish(g: Graph, lab: Labeling, bipartition: Bipartition = None) -> Labeling:
    verify(g, lab, bipartition=bipartition).raise_for_status()
    return lab


def _edges_of(g: Graph, lab: Labeling) -> tuple[Color, ...]:
    if lab.edge is not None:
        return lab.edge_colors()
    return induce_edge_colors(g, lab.vertex, "abs-difference")


# =============================================================================
# Dual
# =============================================================================


def dual(lab: Labeling, part: str = "all") -> Labeling:
    """
    Replace every color c on the chosen part by max + min - c.

    ``part`` is ``"all"`` (vertices and edges share one extreme pair),
    ``"vertex"`` or ``"edge"``.

    Usage:
        dual(Labeling((0, 3, 1, 2))).vertex   # (3, 0, 2, 1)
    """
    if part not in ("all", "vertex", "edge"):
        raise PreconditionError(f"unknown part {part!r}; expected all, vertex or edge")
    vc = lab.vertex_colors()
    ec = lab.edge_colors() if lab.edge is not None else None
    if part == "edge" and ec is None:
        raise PreconditionError("labeling has no edge colors")

    def flip(colors: Sequence[int], pool: Sequence[int]) -> tuple[int, ...]:
        s = max(pool) + min(pool)
        return tuple(s - c for c in colors)

    if part == "vertex" or (part == "all" and ec is None):
        if not vc:
            raise PreconditionError("dual of an empty labeling")
        return Labeling(flip(vc, vc), ec, kind="")
    if part == "edge":
        return Labeling(vc, flip(ec, ec), kind="")
    pool = vc + ec
    if not pool:
        raise PreconditionError("dual of an empty labeling")
    return Labeling(flip(vc, pool), flip(ec, pool), kind="")


# =============================================================================
# Set-dual family
# =============================================================================

SET_DUAL_VARIANTS = (
    "f_dual",
    "f_dual_star",
    "g_setXY",
    "g_setXY_star",
    "h_setX",
    "h_setX_star",
    "h_setY",
    "h_setY_star",
    "alpha_set",
)


def set_dual_transform(g: Graph, f: Labeling, variant: str, bipartition: Bipartition = None) -> Labeling:
    """
    Build one member of the set-dual family of a set-ordered graceful f.

    Every variant is returned as a total labeling tagged with the kind it
    satisfies and is verified before it is returned:

    - f_dual: q - f(w) on vertices; set-ordered graceful
    - f_dual_star: q - f(w), edges q+1-f(e); set-ordered edge-difference, k = q+1
    - g_setXY: reverse colors within X and within Y; set-ordered pan-graceful
    - g_setXY_star: g_setXY with edges q+1-f(e); graceful-difference,
      k = min f(Y) - max f(X) - 1
    - h_setX: reverse within X, edges f(e); felicitous-difference, k = max f(X)
    - h_setX_star: edges q+1-f(e); edge-magic, k = q+1+max f(X)
    - h_setY: reverse within Y, edges f(e); edge-magic, k = max f(Y)+min f(Y)
    - h_setY_star: edges q+1-f(e); felicitous-difference, k = min f(Y)-1
    - alpha_set: vertex dual of g_setXY; set-ordered pan-graceful

    Usage:
        set_dual_transform(path(4), Labeling((0, 3, 1, 2)), "f_dual").vertex  # (3, 0, 2, 1)
    """
    if variant not in SET_DUAL_VARIANTS:
        raise PreconditionError(f"unknown set-dual variant {variant!r}; expected one of {SET_DUAL_VARIANTS}")
    s = _graceful_sides(g, f, bipartition)
    q = g.q
    fv = s.colors
    fe = _edges_of(g, f)
    xs = set(s.x)
    rx = s.max_x + s.min_x
    ry = s.max_y + s.min_y

    def reverse(v: int, flip_x: bool, flip_y: bool) -> int:
        if v in xs:
            return rx - fv[v] if flip_x else fv[v]
        return ry - fv[v] if flip_y else fv[v]

    star = tuple(q + 1 - e for e in fe)

    if variant in ("f_dual", "f_dual_star"):
        vertex = tuple(q - c for c in fv)
        if variant == "f_dual":
            lab = Labeling(vertex, induce_edge_colors(g, vertex, "abs-difference"), kind="set-ordered-graceful")
        else:
            lab = Labeling(vertex, star, kind="edge-difference-coloring", params={"set_ordered": 1, "magic": q + 1})
        return _finish(g, lab)

    flip_x = variant.startswith(("g_", "h_setX", "alpha"))
    flip_y = variant.startswith(("g_", "h_setY", "alpha"))
    vertex = tuple(reverse(v, flip_x, flip_y) for v in g.vertices)

    if variant == "g_setXY":
        lab = Labeling(vertex, induce_edge_colors(g, vertex, "abs-difference"), kind="set-ordered-pan-graceful")
    elif variant == "alpha_set":
        total = max(vertex) + min(vertex)
        vertex = tuple(total - c for c in vertex)
        lab = Labeling(vertex, induce_edge_colors(g, vertex, "abs-difference"), kind="set-ordered-pan-graceful")
    elif variant == "g_setXY_star":
        lab = Labeling(vertex, star, kind="graceful-difference-coloring", params={"magic": s.min_y - s.max_x - 1})
    elif variant == "h_setX":
        lab = Labeling(vertex, fe, kind="felicitous-difference-coloring", params={"magic": s.max_x})
    elif variant == "h_setX_star":
        lab = Labeling(vertex, star, kind="edge-magic-coloring", params={"magic": q + 1 + s.max_x})
    elif variant == "h_setY":
        lab = Labeling(vertex, fe, kind="edge-magic-coloring", params={"magic": ry})
    else:
        lab = Labeling(vertex, star, kind="felicitous-difference-coloring", params={"magic": s.min_y - 1})
    return _finish(g, lab)


class DualPair(NamedTuple):
    left: str
    right: str
    first: Labeling
    second: Labeling


def set_dual_matchings(g: Graph, f: Labeling, bipartition: Bipartition = None) -> list[DualPair]:
    """
    The four dual-type matchings of f: (f, f_dual_star), (g_setXY, g_setXY_star),
    (h_setX, h_setY_star) and (h_setX_star, h_setY).
    """
    base = f.with_edges(_edges_of(g, f)).with_kind("set-ordered-graceful")
    build = lambda name: set_dual_transform(g, f, name, bipartition)  # noqa: E731
    return [
        DualPair("f", "f_dual_star", base, build("f_dual_star")),
        DualPair("g_setXY", "g_setXY_star", build("g_setXY"), build("g_setXY_star")),
        DualPair("h_setX", "h_setY_star", build("h_setX"), build("h_setY_star")),
        DualPair("h_setX_star", "h_setY", build("h_setX_star"), build("h_setY")),
    ]


# =============================================================================
# Reciprocal
# =============================================================================

EDGE_RULES = ("keep", "complement", "recompute")


def _reverse_order(vertices: Sequence[int], colors: Sequence[int], out: list[int]) -> None:
    """The vertex holding the i-th smallest color takes the i-th largest."""
    ranked = sorted(vertices, key=lambda v: (colors[v], v))
    values = [colors[v] for v in ranked]
    for v, c in zip(ranked, reversed(values)):
        out[v] = c


def reciprocal_transform(
    g: Graph,
    lab: Labeling,
    part: str = "X",
    edge_rule: str = "keep",
    bipartition: Bipartition = None,
) -> Labeling:
    """
    Reverse the color order within X, within Y, or across all vertices.

    ``edge_rule`` decides the edges: ``keep`` the old colors, ``complement``
    them as max + min - c, or ``recompute`` them as |f(u) - f(v)|. A vertex
    labeling without stored edges is read with abs-difference edges.

    Usage:
        reciprocal_transform(path(4), Labeling((0, 3, 1, 2)), "X")
    """
    if part not in ("X", "Y", "total"):
        raise PreconditionError(f"unknown reciprocal part {part!r}; expected X, Y or total")
    if edge_rule not in EDGE_RULES:
        raise PreconditionError(f"unknown edge rule {edge_rule!r}; expected one of {EDGE_RULES}")
    s = ordered_sides(g, lab, bipartition)
    vertex = list(s.colors)
    if part == "X":
        _reverse_order(s.x, s.colors, vertex)
    elif part == "Y":
        _reverse_order(s.y, s.colors, vertex)
    else:
        _reverse_order(list(g.vertices), s.colors, vertex)

    old = _edges_of(g, lab)
    if edge_rule == "keep":
        edges = old
    elif edge_rule == "complement":
        top = max(old) + min(old) if old else 0
        edges = tuple(top - e for e in old)
    else:
        edges = induce_edge_colors(g, vertex, "abs-difference")
    return Labeling(tuple(vertex), edges, kind="")


# =============================================================================
# Magic-family duals
# =============================================================================

_FAMILY_FLIPS = {
    "edge-magic": (True, True),
    "edge-difference": (True, False),
    "graceful-difference": (True, False),
    "felicitous-difference": (True, True),
}


def magic_dual(g: Graph, lab: Labeling, family: Optional[str] = None) -> Labeling:
    """
    Dual of a magic-family total coloring.

    Edge-magic and felicitous-difference complement every element;
    edge-difference and graceful-difference complement the vertices and keep
    the edges. The result is verified as the same family.
    """
    tag = lab.kind
    if family is None:
        family = tag.removeprefix("odd-").removesuffix("-coloring")
    if family not in _FAMILY_FLIPS:
        raise PreconditionError(f"no magic-family dual for {family!r}; expected one of {sorted(_FAMILY_FLIPS)}")
    if not tag.endswith(f"{family}-coloring"):
        tag = f"{family}-coloring"
    verify(g, lab, tag).raise_for_status()
    flip_v, flip_e = _FAMILY_FLIPS[family]
    vc, ec = lab.vertex_colors(), lab.edge_colors()
    if flip_v:
        vc = tuple(max(vc) + min(vc) - c for c in vc)
    if flip_e and ec:
        ec = tuple(max(ec) + min(ec) - c for c in ec)
    params = {k: v for k, v in lab.params.items() if k != "magic"}
    return _finish(g, Labeling(vc, ec, kind=tag, params=params))


# =============================================================================
# Equivalent labelings of set-ordered graceful trees
# =============================================================================

EQUIVALENT_TARGETS = (
    "kd-graceful",
    "odd-elegant",
    "kd-elegant",
    "strongly-edge-magic-kd-total",
    "strongly-graceful-difference-kd-total",
    "strongly-felicitous-difference-kd-total",
    "super-edge-magic-total",
    "super-felicitous",
    "kd-edge-difference-magically",
)


def odd_elegant_from_graceful(g: Graph, f: Labeling, bipartition: Bipartition = None) -> Labeling:
    """
    Set-ordered odd-elegant labeling from a set-ordered graceful one.

    Reverse the colors within X, then h(x) = 2 g(x) and h(y) = 2 f(y) - 1.
    """
    s = _graceful_sides(g, f, bipartition)
    xs = set(s.x)
    rx = s.max_x + s.min_x
    vertex = tuple(2 * (rx - c) if v in xs else 2 * c - 1 for v, c in enumerate(s.colors))
    edges = induce_edge_colors(g, vertex, "mod-sum", modulus=2 * g.q)
    return _finish(g, Labeling(vertex, edges, kind="odd-elegant"))


def equivalent_labeling(
    t: Graph,
    f: Labeling,
    target: str,
    k: int = 1,
    d: int = 1,
    bipartition: Bipartition = None,
) -> Labeling:
    """
    Carry a set-ordered graceful tree labeling f to an equivalent ``target``.

    The (k,d) forms start from f*(x) = f(x) d and f*(y) = k + (f(y) - 1) d.

    Usage:
        equivalent_labeling(path(4), Labeling((0, 3, 1, 2)), "kd-graceful", k=1, d=2)
    """
    if target not in EQUIVALENT_TARGETS:
        raise PreconditionError(f"no construction from set-ordered graceful to {target!r}; supported: {EQUIVALENT_TARGETS}")
    if not is_tree(t):
        raise PreconditionError("equivalent labelings are constructed on trees")
    if target == "odd-elegant":
        return odd_elegant_from_graceful(t, f, bipartition)
    if k < 1 or d < 1:
        raise PreconditionError(f"(k, d) must be positive, got ({k}, {d})")

    s = _graceful_sides(t, f, bipartition)
    q, p = t.q, t.vertex_count
    fv = s.colors
    fe = _edges_of(t, f)
    xs = set(s.x)
    rx, ry = s.max_x + s.min_x, s.max_y + s.min_y

    def star(v: int) -> int:
        return fv[v] * d if v in xs else k + (fv[v] - 1) * d

    def x_reversed(v: int) -> int:
        return (rx - fv[v]) * d

    if target == "kd-graceful":
        lab = Labeling(tuple(star(v) for v in t.vertices), kind=target, params={"k": k, "d": d})
    elif target == "kd-elegant":
        vertex = tuple(x_reversed(v) if v in xs else star(v) for v in t.vertices)
        edges = tuple(k + (vertex[u] + vertex[w] - k) % (q * d) for u, w in t.edges)
        lab = Labeling(vertex, edges, kind=target, params={"k": k, "d": d})
    elif target == "strongly-edge-magic-kd-total":
        vertex = tuple(x_reversed(v) if v in xs else star(v) for v in t.vertices)
        edges = tuple(k + (q - e) * d for e in fe)
        lab = Labeling(vertex, edges, kind=target, params={"k": k, "d": d, "magic": 2 * k + d * (q + s.max_x - 1)})
    elif target == "strongly-graceful-difference-kd-total":
        top_y = max(star(v) for v in s.y) + min(star(v) for v in s.y)
        vertex = tuple(x_reversed(v) if v in xs else top_y - star(v) for v in t.vertices)
        edges = tuple(k + (q - e) * d for e in fe)
        lab = Labeling(vertex, edges, kind=target, params={"k": k, "d": d})
    elif target == "strongly-felicitous-difference-kd-total":
        vertex = tuple(x_reversed(v) if v in xs else star(v) for v in t.vertices)
        edges = tuple(k + (e - 1) * d for e in fe)
        lab = Labeling(vertex, edges, kind=target, params={"k": k, "d": d, "magic": d * s.max_x})
    elif target == "super-edge-magic-total":
        vertex = tuple(fv[v] + 1 if v in xs else ry - fv[v] + 1 for v in t.vertices)
        lab = Labeling(vertex, tuple(p + e for e in fe), kind=target)
    elif target == "super-felicitous":
        vertex = tuple(rx - fv[v] + 1 if v in xs else fv[v] + 1 for v in t.vertices)
        lab = Labeling(vertex, kind=target)
    else:
        top_y = max(star(v) for v in s.y) + min(star(v) for v in s.y)
        vertex = tuple(x_reversed(v) if v in xs else top_y - star(v) for v in t.vertices)
        edges = tuple(k + (e - 1) * d for e in fe)
        lab = Labeling(vertex, edges, kind=target, params={"k": k, "d": d, "lambda": -1})
    log.debug("equivalent %s from %r", target, f.vertex)
    return _finish(t, lab)


def caterpillar_graceful(g: Graph) -> Labeling:
    """
    Set-ordered graceful labeling of a caterpillar.

    Walk the spine from one end. Neighbors of even spine positions take the
    high colors q, q-1, ... and neighbors of odd positions the low colors
    1, 2, ..., the next spine vertex always last.

    Usage:
        caterpillar_graceful(star(3)).vertex   # (0, 3, 2, 1)
    """
    if not is_tree(g):
        raise PreconditionError("caterpillar_graceful needs a tree")
    if g.vertex_count == 1:
        return Labeling((0,), kind="set-ordered-graceful")
    spine = {v for v in g.vertices if g.degree(v) > 1} or {0}
    links = {v: sorted(w for w in g.adjacency[v] if w in spine) for v in spine}
    if any(len(ws) > 2 for ws in links.values()):
        raise PreconditionError("graph is not a caterpillar: its leafless core is not a path")
    order = [min(v for v in spine if len(links[v]) <= 1)]
    while len(order) < len(spine):
        order.append(next(w for w in links[order[-1]] if w not in order[-2:]))

    colors: list[Optional[int]] = [None] * g.vertex_count
    colors[order[0]] = 0
    lo, hi = 1, g.q
    for i, v in enumerate(order):
        nxt = order[i + 1] if i + 1 < len(order) else None
        targets = sorted(w for w in g.adjacency[v] if colors[w] is None and w != nxt)
        if nxt is not None:
            targets.append(nxt)
        for w in targets:
            if i % 2 == 0:
                colors[w], hi = hi, hi - 1
            else:
                colors[w], lo = lo, lo + 1
    return _finish(g, Labeling(tuple(colors), kind="set-ordered-graceful"))


# =============================================================================
# Joining graceful graphs
# =============================================================================

JOIN_MODES = ("bridge", "coincide-x", "coincide-y", "edge-coincide")


def graceful_join(
    g: Graph,
    f: Labeling,
    t: Graph,
    h: Labeling,
    mode: str = "bridge",
    bipartition: Bipartition = None,
) -> tuple[Graph, Labeling]:
    """
    Glue a set-ordered graceful (g, f) to a graceful (t, h) into one graceful graph.

    With x_s the top X vertex and y_1 the bottom Y vertex of g, w_1 and w_m the
    vertices of t colored 0 and m = |E(t)|:

    - bridge: t shifted by f(x_s)+1, Y shifted by m+1, new edge x_s w_m
    - coincide-x: t shifted by f(x_s), Y by m, w_1 merged into x_s
    - coincide-y: t shifted by f(x_s)+1, Y by m, w_m merged into y_1
    - edge-coincide: t shifted by f(x_s), Y by m-1, edge w_1 w_m merged into x_s y_1

    Returns the new graph (t's vertices follow g's, merged ones removed) and
    its verified graceful labeling.

    Usage:
        graceful_join(path(2), Labeling((0, 1)), path(2), Labeling((0, 1)), "bridge")
    """
    if mode not in JOIN_MODES:
        raise PreconditionError(f"unknown join mode {mode!r}; expected one of {JOIN_MODES}")
    s = _graceful_sides(g, f, bipartition)
    verify(t, h, "graceful").raise_for_status()
    m = t.q
    if m == 0:
        raise PreconditionError("the graph joined on needs at least one edge")
    tc = h.vertex_colors()
    w_1, w_m = tc.index(0), tc.index(m)
    x_s, y_1 = s.top_x(), s.bottom_y()
    top = s.colors[x_s]
    xs = set(s.x)

    t_shift, y_shift = {
        "bridge": (top + 1, m + 1),
        "coincide-x": (top, m),
        "coincide-y": (top + 1, m),
        "edge-coincide": (top, m - 1),
    }[mode]
    colors = [c if v in xs else c + y_shift for v, c in enumerate(s.colors)]
    colors += [c + t_shift for c in tc]

    union = disjoint_union(g, t)
    shift = g.vertex_count
    if mode == "bridge":
        joined = Graph(union.vertex_count, union.edges + ((x_s, w_m + shift),))
        remap = tuple(union.vertices)
    elif mode == "coincide-x":
        joined, remap = vertex_coincide(union, x_s, w_1 + shift)
    elif mode == "coincide-y":
        joined, remap = vertex_coincide(union, y_1, w_m + shift)
    else:
        if not g.has_edge(x_s, y_1):
            raise PreconditionError(f"edge-coincide needs the edge x_s y_1 = ({x_s}, {y_1})")
        joined, remap = edge_coincide(union, (x_s, y_1), (w_1 + shift, w_m + shift))

    vertex: list[Optional[int]] = [None] * joined.vertex_count
    for old, new in enumerate(remap):
        if new is not None:
            vertex[new] = colors[old]
    lab = Labeling(tuple(vertex), kind="graceful")
    log.debug("graceful join (%s): %d + %d edges -> %d", mode, g.q, m, joined.q)
    return joined, _finish(joined, lab)


# =============================================================================
# Totally (k,d)-sequential
# =============================================================================


def totally_kd_sequential(t: Graph, f: Labeling, k: int, d: int, bipartition: Bipartition = None) -> Labeling:
    """
    Totally (k,d)-sequential labeling of a tree with a set-ordered graceful f.

    Vertices take k + 2 f(v) d and edges k - d + |g(x) - g(y)|, so the vertex
    colors are k + (even) d and the edge colors k + (odd) d.

    Usage:
        totally_kd_sequential(path(2), Labeling((0, 1)), 1, 1)   # (1, 3; 2)
    """
    if k < 1 or d < 1:
        raise PreconditionError(f"(k, d) must be positive, got ({k}, {d})")
    if not is_tree(t):
        raise PreconditionError("totally (k,d)-sequential labelings are built on trees")
    s = _graceful_sides(t, f, bipartition)
    vertex = tuple(k + 2 * c * d for c in s.colors)
    edges = tuple(k - d + abs(vertex[u] - vertex[v]) for u, v in t.edges)
    return _finish(t, Labeling(vertex, edges, kind="totally-kd-sequential", params={"k": k, "d": d}))


# =============================================================================
# Multi-dimension composition
# =============================================================================


@dataclass(frozen=True)
class CompositeColoring:
    """Every element colored with the tuple of its layer colors."""

    vertex: tuple[tuple[Color, ...], ...]
    edge: tuple[tuple[Color, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vertex[0]) if self.vertex else 0

    def layer(self, i: int) -> Labeling:
        return Labeling(tuple(v[i] for v in self.vertex), tuple(e[i] for e in self.edge))

    def render(self, sep: str = "") -> tuple[list[str], list[str]]:
        """Digit-string form: each tuple joined with ``sep``."""
        join = lambda colors: sep.join(str(c) for c in colors)  # noqa: E731
        return [join(v) for v in self.vertex], [join(e) for e in self.edge]


def multi_dimension_compose(g: Graph, layers: Sequence[Labeling]) -> CompositeColoring:
    """
    F(w) = (f_1(w), f_2(w), ..., f_n(w)) for every vertex and edge.

    Every layer is a total coloring of g.

    Usage:
        multi_dimension_compose(path(2), [Labeling((0, 1), (1,)), Labeling((1, 0), (1,))]).vertex
        # ((0, 1), (1, 0))
    """
    if len(layers) < 2:
        raise PreconditionError("composition needs at least two layers")
    for i, lab in enumerate(layers):
        lab.check_host(g)
        if lab.edge is None:
            raise PreconditionError(f"layer {i} colors no edges; every layer must be a total coloring")
    vertex = tuple(zip(*(lab.vertex_colors() for lab in layers)))
    edge = tuple(zip(*(lab.edge_colors() for lab in layers)))
    return CompositeColoring(vertex, edge)
