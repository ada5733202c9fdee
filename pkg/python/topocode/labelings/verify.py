"""The labeling-kind catalog and the verifier that checks it.

Every kind is registered under a kebab-case tag with the domain it colors
(``vertex`` or ``total``), its required parameters and, for kinds that can be
searched, the color span and pruning hints used by ``search_labeling``.

Condition names in violations follow the definitions: ``B-1`` .. ``B-8`` for
the graceful family, ``(i)`` .. ``(vi)`` for 6C, and short phrases elsewhere.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

import networkx as nx

from ..errors import MissingParameterError, PreconditionError, UnknownKindError
from ..graph import Edge, Graph, is_tree
from .kinds import Labeling, VerificationReport, Violation

log = logging.getLogger(__name__)

Span = Callable[[int, int, Mapping[str, Any]], range]
EdgeKey = Callable[[int, Mapping[str, Any]], Callable[[int, int], int]]


# =============================================================================
# Registry
# =============================================================================


@dataclass(frozen=True)
class KindSpec:
    tag: str
    check: Callable[["Check"], None]
    domain: str = "vertex"
    required: tuple[str, ...] = ()
    span: Optional[Span] = None
    injective: bool = False
    distinct: Optional[EdgeKey] = None
    bijective: bool = False
    summary: str = ""

    @property
    def searchable(self) -> bool:
        return self.bijective or (self.domain == "vertex" and self.span is not None)


KINDS: dict[str, KindSpec] = {}


def register(tag: str, check: Callable[["Check"], None], **options: Any) -> KindSpec:
    if tag in KINDS:
        raise ValueError(f"labeling kind {tag!r} registered twice")
    summary = options.pop("summary", "") or (check.__doc__ or "").strip().split("\n")[0]
    spec = KindSpec(tag, check, summary=summary, **options)
    KINDS[tag] = spec
    return spec


def kind(tag: str, **options: Any) -> Callable:
    """
    Register a verifier function under ``tag``.

    Usage:
        @kind("graceful", span=lambda p, q, P: range(q + 1), injective=True)
        def _graceful(c: Check) -> None:
            ...
    """

    def decorator(fn: Callable[["Check"], None]) -> Callable[["Check"], None]:
        register(tag, fn, **options)
        return fn

    return decorator


def get_kind(tag: str) -> KindSpec:
    try:
        return KINDS[tag]
    except KeyError:
        raise UnknownKindError(f"unknown labeling kind {tag!r}") from None


def catalog() -> list[tuple[str, str, str]]:
    """(tag, domain, summary) for every registered kind, sorted by tag."""
    return [(s.tag, s.domain, s.summary) for s in sorted(KINDS.values(), key=lambda s: s.tag)]


# =============================================================================
# Check context
# =============================================================================

_UNSET: Any = object()


class Check:
    """Mutable scratchpad for one verification run."""

    def __init__(
        self,
        g: Graph,
        lab: Labeling,
        params: Mapping[str, Any],
        bipartition: Optional[tuple[Iterable[int], Iterable[int]]] = None,
    ):
        self.g = g
        self.lab = lab
        self.params = params
        self.p, self.q = g.p, g.q
        self.vc: tuple[int, ...] = lab.vertex_colors()
        self.violations: list[Violation] = []
        self.details: dict[str, Any] = {}
        self._given = bipartition
        self._sides: Any = _UNSET

    # -- bookkeeping ----------------------------------------------------------

    def fail(self, condition: str, witness: Any = None) -> None:
        self.violations.append(Violation(condition, witness))

    def expect(self, ok: bool, condition: str, witness: Any = None) -> bool:
        if not ok:
            self.fail(condition, witness)
        return ok

    def param(self, name: str, default: Any = _UNSET) -> Any:
        if name in self.params:
            return self.params[name]
        if default is _UNSET:
            raise MissingParameterError(f"parameter {name!r} is required")
        return default

    def kd(self) -> tuple[int, int]:
        k, d = int(self.param("k")), int(self.param("d"))
        if d < 1 or k < 0:
            raise PreconditionError(f"(k, d) needs k >= 0 and d >= 1, got ({k}, {d})")
        return k, d

    @property
    def ec(self) -> tuple[int, ...]:
        return self.lab.edge_colors()

    # -- element checks -------------------------------------------------------

    def injective(self, colors: Sequence[int], condition: str, elements: Optional[Sequence[Any]] = None) -> bool:
        seen: dict[int, int] = {}
        for i, c in enumerate(colors):
            if c in seen:
                names = elements or range(len(colors))
                self.fail(condition, (names[seen[c]], names[i], c))
                return False
            seen[c] = i
        return True

    def within(self, colors: Sequence[int], lo: int, hi: int, condition: str, elements: Optional[Sequence[Any]] = None) -> bool:
        for i, c in enumerate(colors):
            if not lo <= c <= hi:
                self.fail(condition, ((elements or range(len(colors)))[i], c))
                return False
        return True

    def color_set(self, colors: Iterable[int], target: Iterable[int], condition: str) -> bool:
        """The colors are pairwise distinct and form exactly ``target``."""
        counts = Counter(colors)
        want = set(target)
        witness = {
            "repeated": sorted(c for c, n in counts.items() if n > 1),
            "missing": sorted(want - counts.keys()),
            "extra": sorted(counts.keys() - want),
        }
        if any(witness.values()):
            self.fail(condition, {k: v for k, v in witness.items() if v})
            return False
        return True

    def bijection(self, lo: int, hi: int, condition: str) -> bool:
        return self.color_set(self.vc + self.ec, range(lo, hi + 1), condition)

    def constant(self, values: Sequence[int], condition: str, name: str) -> Optional[int]:
        """All per-edge values agree (with params[name] when given)."""
        if not values:
            return None
        want = self.params.get(name, values[0])
        for e, v in zip(self.g.edges, values):
            if v != want:
                self.fail(condition, (e, v, want))
                return None
        self.details[name] = want
        return want

    def common_value(self, options: Sequence[set[int]], condition: str, name: str) -> Optional[int]:
        """Some value lies in every edge's option set; the smallest is reported."""
        if not options:
            return None
        pool = {self.params[name]} if name in self.params else set(options[0])
        for e, opts in zip(self.g.edges, options):
            pool &= opts
            if not pool:
                self.fail(condition, e)
                return None
        self.details[name] = min(pool)
        return self.details[name]

    def induced(self, fn: Callable[[int, int], int], condition: str = "induced edge colors") -> tuple[int, ...]:
        """Edge colors from the rule; stored edge colors must agree with it."""
        derived = tuple(fn(self.vc[u], self.vc[v]) for u, v in self.g.edges)
        if self.lab.edge is not None:
            for e, have, want in zip(self.g.edges, self.lab.edge, derived):
                if have != want:
                    self.fail(condition, (e, have, want))
                    break
        return derived

    def edge_rule(self, fn: Callable[[int, int], int], condition: str) -> bool:
        for (u, v), e in zip(self.g.edges, self.ec):
            want = fn(self.vc[u], self.vc[v])
            if e != want:
                self.fail(condition, ((u, v), e, want))
                return False
        return True

    def non_negative(self, condition: str = "colors are non-negative") -> bool:
        colors = self.vc + (self.ec if self.lab.edge is not None else ())
        return self.expect(min(colors, default=0) >= 0, condition, min(colors, default=0))

    def proper_vertices(self, condition: str = "proper: adjacent vertices distinct") -> bool:
        for u, v in self.g.edges:
            if self.vc[u] == self.vc[v]:
                self.fail(condition, (u, v))
                return False
        return True

    def proper_total(self, incident: bool = True) -> bool:
        ok = self.proper_vertices()
        ec = self.ec
        for v in self.g.vertices:
            around = [ec[self.g.edge_index[e]] for e in self._incident(v)]
            if len(set(around)) != len(around):
                ok = self.expect(False, "proper: adjacent edges distinct", v)
                break
        if incident:
            for (u, v), e in zip(self.g.edges, ec):
                if e in (self.vc[u], self.vc[v]):
                    ok = self.expect(False, "proper: incident vertex and edge distinct", (u, v))
                    break
        return ok

    def _incident(self, v: int) -> list[Edge]:
        return [(min(v, w), max(v, w)) for w in self.g.adjacency[v]]

    # -- bipartite structure --------------------------------------------------

    def sides(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """
        The bipartition (X, Y) used by set-ordered and X/Y-typed clauses.

        An explicit bipartition is taken as given. Otherwise each component is
        two-colored and its X side is the one holding the component's smallest
        vertex color.
        """
        if self._sides is _UNSET:
            self._sides = self._resolve_sides()
        return self._sides

    def _resolve_sides(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        everything = frozenset(self.g.vertices)
        if self._given is not None:
            x, y = (frozenset(part) for part in self._given)
            if x & y or x | y != everything:
                raise PreconditionError("bipartition must split the vertex set into two disjoint parts")
            for u, v in self.g.edges:
                if (u in x) == (v in x):
                    self.fail("bipartite", (u, v))
                    return None
            return x, y
        two = self.g.bipartition()
        if two is None:
            self.fail("bipartite", "odd cycle")
            return None
        base, _ = two
        x: set[int] = set()
        for comp in self.g.components():
            low = min(comp, key=lambda v: (self.vc[v], v))
            x.update(v for v in comp if (v in base) == (low in base))
        return frozenset(x), everything - frozenset(x)

    def side_colors(self) -> Optional[tuple[list[int], list[int]]]:
        sides = self.sides()
        if sides is None:
            return None
        x, y = sides
        return [self.vc[v] for v in sorted(x)], [self.vc[v] for v in sorted(y)]

    def oriented(self) -> Optional[list[tuple[int, int]]]:
        """Edges as (x, y) pairs with x in X."""
        sides = self.sides()
        if sides is None:
            return None
        x, _ = sides
        return [(u, v) if u in x else (v, u) for u, v in self.g.edges]

    def set_ordered(self, condition: str = "B-6 set-ordered max f(X) < min f(Y)") -> bool:
        colors = self.side_colors()
        if colors is None:
            return False
        xs, ys = colors
        if not xs or not ys:
            return True
        ok = self.expect(max(xs) < min(ys), condition, (max(xs), min(ys)))
        if ok:
            self.details["max_x"], self.details["min_y"] = max(xs), min(ys)
        return ok

    def sum_matching(self, target: int, condition: str) -> bool:
        """Some perfect matching uses only edges whose end colors sum to target."""
        sides = self.sides()
        if sides is None:
            return False
        x, y = sides
        if len(x) != len(y):
            self.fail(condition, {"X": len(x), "Y": len(y)})
            return False
        options = {u: [w for w in sorted(self.g.adjacency[u]) if self.vc[u] + self.vc[w] == target] for u in sorted(x)}
        if bipartite_matching(sorted(x), options) is None:
            self.fail(condition, target)
            return False
        return True


def bipartite_matching(left: Sequence[Any], options: Mapping[Any, Sequence[Any]]) -> Optional[dict[Any, Any]]:
    """Hopcroft-Karp matching saturating ``left``, or None."""
    h = nx.Graph()
    top = [("L", u) for u in left]
    h.add_nodes_from(top)
    h.add_edges_from((("L", u), ("R", r)) for u in left for r in options[u])
    found = nx.bipartite.hopcroft_karp_matching(h, top_nodes=top)
    if any(node not in found for node in top):
        return None
    return {u: found[("L", u)][1] for u in left}


# =============================================================================
# verify()
# =============================================================================


def verify(
    g: Graph,
    lab: Labeling,
    kind: Optional[str] = None,
    *,
    bipartition: Optional[tuple[Iterable[int], Iterable[int]]] = None,
    **params: Any,
) -> VerificationReport:
    """
    Check ``lab`` against every clause of a labeling kind.

    ``kind`` defaults to ``lab.kind``; keyword parameters override
    ``lab.params``. Total kinds need every vertex and edge colored. A
    ``proper=1`` parameter adds the proper total coloring clauses to any
    total kind, and ``set_ordered=1`` adds the set-ordered clause.

    Usage:
        verify(path(4), Labeling((0, 3, 1, 2)), "graceful").accepted   # True
        verify(path(7), lab, "kl-magic-total", k=2)
    """
    tag = kind or lab.kind
    if not tag:
        raise UnknownKindError("no labeling kind given")
    spec = get_kind(tag)
    lab.check_host(g)
    merged = {**lab.params, **params}
    for name in spec.required:
        if name not in merged:
            raise MissingParameterError(f"kind {tag!r} requires parameter {name!r}")
    if spec.domain == "total" and not lab.is_total:
        raise PreconditionError(f"kind {tag!r} colors vertices and edges; the labeling is not total")

    c = Check(g, lab, merged, bipartition)
    spec.check(c)
    if spec.domain == "total" and merged.get("proper"):
        c.proper_total()
    if merged.get("set_ordered"):
        c.set_ordered()
    report = VerificationReport(tag, tuple(c.violations), c.details)
    log.debug("verify %s on %r: %s", tag, g, "accepted" if report.accepted else report.violations)
    return report


# =============================================================================
# Shared sets and rules
# =============================================================================


def odd_set(q: int) -> set[int]:
    """[1, 2q-1]^o"""
    return set(range(1, 2 * q, 2))


def arithmetic(k: int, d: int, n: int) -> set[int]:
    """{k, k+d, ..., k+(n-1)d}"""
    return {k + i * d for i in range(n)}


def odd_arithmetic(k: int, d: int, q: int) -> set[int]:
    """{k+d, k+3d, ..., k+(2q-1)d}"""
    return {k + (2 * i + 1) * d for i in range(q)}


def _abs(a: int, b: int) -> int:
    return abs(a - b)


def kd_mod_sum(k: int, modulus: int) -> Callable[[int, int], int]:
    """h(uv) = k + ((h(u) + h(v) - k) mod modulus)"""
    return lambda a, b: k + (a + b - k) % modulus


def _abs_key(q: int, P: Mapping[str, Any]) -> Callable[[int, int], int]:
    return _abs


def _kd_bound(P: Mapping[str, Any], factor: int, q: int) -> int:
    return int(P["k"]) + (factor * q - 1) * int(P["d"])


# =============================================================================
# Graceful family (B-1 .. B-8)
# =============================================================================


def _graceful_family(c: Check, *, odd: bool, set_ordered: bool, strongly: bool) -> None:
    q = c.q
    hi = max(2 * q - 1 if odd else q, 0)
    c.injective(c.vc, "B-1 injective vertex colors")
    c.within(c.vc, 0, hi, f"{'B-3' if odd else 'B-2'} vertex colors in [0, {hi}]")
    if c.vc:
        c.expect(min(c.vc) == 0, f"{'B-3' if odd else 'B-2'} min vertex color is 0", min(c.vc))
    edges = c.induced(_abs)
    if odd:
        c.color_set(edges, odd_set(q), "B-5 edge colors = [1, 2q-1]^o")
    else:
        c.color_set(edges, range(1, q + 1), "B-4 edge colors = [1, q]")
    if set_ordered:
        c.set_ordered()
    if strongly:
        clause = "B-8" if odd else "B-7"
        if c.expect(bool(is_tree(c.g)), f"{clause} host is a tree"):
            target = 2 * q - 1 if odd else q
            c.sum_matching(target, f"{clause} perfect matching with end sums {target}")


for _tag, _odd, _ordered, _strong in (
    ("graceful", False, False, False),
    ("set-ordered-graceful", False, True, False),
    ("strongly-graceful", False, False, True),
    ("set-ordered-strongly-graceful", False, True, True),
    ("odd-graceful", True, False, False),
    ("set-ordered-odd-graceful", True, True, False),
    ("strongly-odd-graceful", True, False, True),
    ("set-ordered-strongly-odd-graceful", True, True, True),
):
    register(
        _tag,
        lambda c, o=_odd, s=_ordered, t=_strong: _graceful_family(c, odd=o, set_ordered=s, strongly=t),
        span=(lambda p, q, P: range(2 * q)) if _odd else (lambda p, q, P: range(q + 1)),
        injective=True,
        distinct=_abs_key,
        summary=f"{_tag.replace('-', ' ')} labeling",
    )


@kind("set-ordered-pan-graceful")
def _pan_graceful(c: Check) -> None:
    """Injective, set-ordered, edge colors are q consecutive integers."""
    c.injective(c.vc, "B-1 injective vertex colors")
    c.non_negative()
    edges = c.induced(_abs)
    if edges:
        low = min(edges)
        c.expect(low >= 1, "edge colors positive", low)
        c.color_set(edges, range(low, low + c.q), "edge colors consecutive")
        c.details["edge_range"] = (low, low + c.q - 1)
    c.set_ordered()


# =============================================================================
# Classical labelings
# =============================================================================


def _edge_magic_total(c: Check, super_: bool) -> None:
    c.bijection(1, c.p + c.q, "bijection onto [1, p+q]")
    c.constant([c.vc[u] + e + c.vc[v] for (u, v), e in zip(c.g.edges, c.ec)], "magic constant", "magic")
    if super_:
        c.color_set(c.vc, range(1, c.p + 1), "super: f(V) = [1, p]")


register("edge-magic-total", lambda c: _edge_magic_total(c, False), domain="total", bijective=True,
         summary="f(u)+f(uv)+f(v) constant, bijection onto [1, p+q]")
register("super-edge-magic-total", lambda c: _edge_magic_total(c, True), domain="total", bijective=True,
         summary="edge-magic total with f(V) = [1, p]")


def _felicitous(c: Check, super_: bool) -> None:
    q = max(c.q, 1)
    c.injective(c.vc, "injective vertex colors")
    if super_:
        c.color_set(c.vc, range(1, c.p + 1), "super: f(V) = [1, p]")
    else:
        c.within(c.vc, 0, c.q, f"vertex colors in [0, {c.q}]")
    edges = c.induced(lambda a, b: (a + b) % q)
    c.injective(edges, "distinct edge colors f(u)+f(v) mod q", c.g.edges)


register("felicitous", lambda c: _felicitous(c, False), span=lambda p, q, P: range(q + 1), injective=True,
         distinct=lambda q, P: (lambda a, b: (a + b) % max(q, 1)), summary="edge sums mod q distinct")
register("super-felicitous", lambda c: _felicitous(c, True), span=lambda p, q, P: range(1, p + 1), injective=True,
         distinct=lambda q, P: (lambda a, b: (a + b) % max(q, 1)), summary="felicitous with f(V) = [1, p]")


@kind("odd-elegant", span=lambda p, q, P: range(2 * q), injective=True,
      distinct=lambda q, P: (lambda a, b: (a + b) % (2 * q)))
def _odd_elegant(c: Check) -> None:
    """Vertex colors in [0, 2q-1], edge sums mod 2q form [1, 2q-1]^o."""
    q = c.q
    c.injective(c.vc, "injective vertex colors")
    c.within(c.vc, 0, 2 * q - 1, f"vertex colors in [0, {2 * q - 1}]")
    if q:
        edges = c.induced(lambda a, b: (a + b) % (2 * q))
        c.color_set(edges, odd_set(q), "edge colors = [1, 2q-1]^o")


@kind("k-graceful", required=("k",), span=lambda p, q, P: range(q + int(P["k"])), injective=True, distinct=_abs_key)
def _k_graceful(c: Check) -> None:
    """Vertex colors in [0, q+k-1], edge differences form [k, q+k-1]."""
    k, q = int(c.param("k")), c.q
    c.injective(c.vc, "injective vertex colors")
    c.within(c.vc, 0, q + k - 1, f"vertex colors in [0, {q + k - 1}]")
    c.color_set(c.induced(_abs), range(k, q + k), f"edge colors = [{k}, {q + k - 1}]")


def _edge_magic_graceful(c: Check, mode: str) -> None:
    n = c.p + c.q
    c.bijection(1, n, "bijection onto [1, p+q]")
    values = [abs(c.vc[u] + c.vc[v] - e) for (u, v), e in zip(c.g.edges, c.ec)]
    if mode == "pan":
        c.common_value([{x, n - x} for x in values], "pan constant |f(u)+f(v)-f(uv)| or (p+q)-|...|", "magic")
    else:
        c.constant(values, "constant |f(u)+f(v)-f(uv)|", "magic")
    if mode == "super":
        c.color_set(c.vc, range(1, c.p + 1), "super: f(V) = [1, p]")


def _edge_difference_total(c: Check, mode: str) -> None:
    n = c.p + c.q
    c.bijection(1, n, "bijection onto [1, p+q]")
    diffs = [abs(c.vc[u] - c.vc[v]) for u, v in c.g.edges]
    if mode == "pan":
        c.common_value([{e + x, e + n - x} for e, x in zip(c.ec, diffs)], "pan constant f(uv)+|f(u)-f(v)|", "magic")
    else:
        c.constant([e + x for e, x in zip(c.ec, diffs)], "constant f(uv)+|f(u)-f(v)|", "magic")
    if mode == "super" and c.ec and c.vc:
        ok = max(c.ec) < min(c.vc) or max(c.vc) < min(c.ec)
        c.expect(ok, "super: f(E) entirely below or above f(V)")


for _suffix, _mode in (("", "plain"), ("super-", "super"), ("pan-", "pan")):
    register(f"{_suffix}edge-magic-graceful", lambda c, m=_mode: _edge_magic_graceful(c, m), domain="total",
             bijective=True, summary=f"{_mode} |f(u)+f(v)-f(uv)| = k")
    register(f"{_suffix}edge-difference-total", lambda c, m=_mode: _edge_difference_total(c, m), domain="total",
             bijective=True, summary=f"{_mode} f(uv)+|f(u)-f(v)| = k")


@kind("pan-odd-graceful", span=lambda p, q, P: range(2 * q), injective=True)
def _pan_odd_graceful(c: Check) -> None:
    """Each edge takes |f(u)-f(v)| or 2q-1-|f(u)-f(v)|; together [1, 2q-1]^o."""
    q = c.q
    c.injective(c.vc, "B-1 injective vertex colors")
    c.within(c.vc, 0, max(2 * q - 1, 0), "B-3 vertex colors in [0, 2q-1]")
    target = odd_set(q)
    options = []
    for u, v in c.g.edges:
        diff = abs(c.vc[u] - c.vc[v])
        options.append(sorted({diff, 2 * q - 1 - diff} & target))
    if c.lab.edge is not None:
        for e, have, opts in zip(c.g.edges, c.lab.edge, options):
            if have not in opts:
                c.fail("edge color is |f(u)-f(v)| or 2q-1-|f(u)-f(v)|", (e, have))
                return
        c.color_set(c.lab.edge, target, "edge colors = [1, 2q-1]^o")
        return
    chosen = bipartite_matching(list(range(q)), dict(enumerate(options)))
    if chosen is None:
        c.fail("edge colors = [1, 2q-1]^o", "no assignment of branches covers the odd set")
    else:
        c.details["edge_colors"] = tuple(chosen[i] for i in range(q))


@kind("6c", domain="total", bijective=True)
def _six_c(c: Check) -> None:
    """Bijective total labeling holding the six 6C clauses."""
    n = c.p + c.q
    ec, vc = c.ec, c.vc
    c.bijection(1, n, "bijection onto [1, p+q]")
    diffs = [abs(vc[u] - vc[v]) for u, v in c.g.edges]

    c.constant([e + x for e, x in zip(ec, diffs)], "(i) e-magic f(uv)+|f(u)-f(v)| = k", "magic")

    reachable = set(diffs)
    for edge, e in zip(c.g.edges, ec):
        if e not in reachable and 2 * n - e not in reachable:
            c.fail("(ii) ee-difference", edge)
            break

    s = [x - e for x, e in zip(diffs, ec)]
    c.common_value([{a + b for b in s} | {2 * n + a + b for b in s} for a in s], "(iii) ee-balanced", "balance")

    vs, es = set(vc), set(ec)
    ordered = (
        not es
        or min(vs) > max(es)
        or max(vs) < min(es)
        or vs <= es
        or es <= vs
        or (all(x % 2 for x in vs) and not any(x % 2 for x in es))
    )
    c.expect(ordered, "(iv) EV-ordered")

    if ec:
        z0 = (n + 1) // 2
        c.details["singularity"] = z0
        pinned = c.params.get("ve_matching")
        candidates = [pinned] if pinned is not None else sorted({ec[0] + w for w in vc})
        found = None
        for k2 in candidates:
            if all(k2 - e in vs for e in ec) and all(k2 - z in es for z in vc if z != z0):
                found = k2
                break
        if found is None:
            c.fail("(v) ve-matching", z0)
        else:
            c.details["ve_matching"] = found

    c.set_ordered("(vi) set-ordered")


def _totally_graceful(c: Check, super_: bool, ordered: bool) -> None:
    c.bijection(1, c.p + c.q, "bijection onto [1, p+q]")
    c.edge_rule(_abs, "f(uv) = |f(u)-f(v)|")
    if super_:
        c.color_set(c.ec, range(1, c.q + 1), "super: f(E) = [1, q]")
    if ordered:
        c.set_ordered()


for _tag, _super, _ordered in (
    ("totally-graceful", False, False),
    ("super-totally-graceful", True, False),
    ("set-ordered-totally-graceful", False, True),
    ("super-set-ordered-totally-graceful", True, True),
):
    register(_tag, lambda c, s=_super, o=_ordered: _totally_graceful(c, s, o), domain="total", bijective=True,
             summary=f"{_tag.replace('-', ' ')} labeling")


# =============================================================================
# (k,d) labelings
# =============================================================================


def _kd_vertex(c: Check, factor: int) -> tuple[int, int]:
    k, d = c.kd()
    bound = k + (factor * c.q - 1) * d
    c.injective(c.vc, "injective vertex colors")
    c.within(c.vc, 0, bound, f"vertex colors in [0, {bound}]")
    return k, d


@kind("kd-graceful", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 1, q) + 1), injective=True,
      distinct=_abs_key)
def _kd_graceful(c: Check) -> None:
    """|f(u)-f(v)| form {k, k+d, ..., k+(q-1)d}."""
    k, d = _kd_vertex(c, 1)
    c.color_set(c.induced(_abs), arithmetic(k, d, c.q), "edge colors = {k, k+d, ..., k+(q-1)d}")


@kind("kd-arithmetic", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 1, q) + 1), injective=True,
      distinct=lambda q, P: (lambda a, b: a + b))
def _kd_arithmetic(c: Check) -> None:
    """f(u)+f(v) form {k, k+d, ..., k+(q-1)d}."""
    k, d = _kd_vertex(c, 1)
    c.color_set(c.induced(lambda a, b: a + b), arithmetic(k, d, c.q), "edge sums = {k, k+d, ..., k+(q-1)d}")


@kind("kd-harmonious", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 1, q) + 1), injective=True,
      distinct=lambda q, P: kd_mod_sum(int(P["k"]), q * int(P["d"])))
def _kd_harmonious(c: Check) -> None:
    """h(uv) = k + ((h(u)+h(v)-k) mod qd) form {k, ..., k+(q-1)d}."""
    k, d = _kd_vertex(c, 1)
    if c.q:
        edges = c.induced(kd_mod_sum(k, c.q * d))
        c.color_set(edges, arithmetic(k, d, c.q), "edge colors = {k, k+d, ..., k+(q-1)d}")


@kind("kd-odd-graceful", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 2, q) + 1), injective=True,
      distinct=_abs_key)
def _kd_odd_graceful(c: Check) -> None:
    """|f(u)-f(v)| form {k+d, k+3d, ..., k+(2q-1)d}."""
    k, d = _kd_vertex(c, 2)
    c.color_set(c.induced(_abs), odd_arithmetic(k, d, c.q), "edge colors = {k+d, k+3d, ..., k+(2q-1)d}")


@kind("kd-odd-elegant", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 2, q) + 1), injective=True,
      distinct=lambda q, P: kd_mod_sum(int(P["k"]), 2 * q * int(P["d"])))
def _kd_odd_elegant(c: Check) -> None:
    """k + ((f(u)+f(v)-k) mod 2qd) form {k+d, k+3d, ..., k+(2q-1)d}."""
    k, d = _kd_vertex(c, 2)
    if c.q:
        edges = c.induced(kd_mod_sum(k, 2 * c.q * d))
        c.color_set(edges, odd_arithmetic(k, d, c.q), "edge colors = {k+d, k+3d, ..., k+(2q-1)d}")


@kind("kd-elegant", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 1, q) + 1),
      distinct=lambda q, P: kd_mod_sum(int(P["k"]), q * int(P["d"])))
def _kd_elegant(c: Check) -> None:
    """X in {0, d, ..., (q-1)d}, Y in k + that set, residues (f(x)+f(y)-k) mod qd all distinct."""
    k, d = c.kd()
    q = c.q
    colors = c.side_colors()
    if colors is None:
        return
    xs, ys = colors
    lattice = {i * d for i in range(q)}
    bad_x = [a for a in xs if a not in lattice]
    bad_y = [b for b in ys if b - k not in lattice]
    c.expect(not bad_x, "X colors in {0, d, ..., (q-1)d}", bad_x[:1])
    c.expect(not bad_y, "Y colors in {k, k+d, ..., k+(q-1)d}", bad_y[:1])
    if q:
        edges = c.induced(kd_mod_sum(k, q * d))
        c.color_set(edges, arithmetic(k, d, q), "edge residues = {0, d, ..., (q-1)d}")


@kind("kd-edge-antimagic-total", domain="total", required=("k", "d"), bijective=True)
def _kd_edge_antimagic(c: Check) -> None:
    """Bijection onto [1, p+q]; edge weights form {k, k+d, ..., k+(q-1)d}."""
    k, d = c.kd()
    c.bijection(1, c.p + c.q, "bijection onto [1, p+q]")
    weights = [c.vc[u] + e + c.vc[v] for (u, v), e in zip(c.g.edges, c.ec)]
    c.color_set(weights, arithmetic(k, d, c.q), "edge weights = {k, k+d, ..., k+(q-1)d}")
    if c.params.get("super"):
        c.color_set(c.vc, range(1, c.p + 1), "super: f(V) = [1, p]")


@kind("odd-elegant-coloring", span=lambda p, q, P: range(2 * q), distinct=lambda q, P: (lambda a, b: (a + b) % (2 * q)))
def _odd_elegant_coloring(c: Check) -> None:
    """Odd-elegant edge sums; equal colors only on non-adjacent vertices."""
    q = c.q
    c.within(c.vc, 0, max(2 * q - 1, 0), "vertex colors in [0, 2q-1]")
    c.proper_vertices()
    if q:
        c.color_set(c.induced(lambda a, b: (a + b) % (2 * q)), odd_set(q), "edge colors = [1, 2q-1]^o")


@kind("kd-odd-elegant-coloring", required=("k", "d"), span=lambda p, q, P: range(_kd_bound(P, 2, q) + 1),
      distinct=lambda q, P: kd_mod_sum(int(P["k"]), 2 * q * int(P["d"])))
def _kd_odd_elegant_coloring(c: Check) -> None:
    """(k,d)-odd-elegant edge rule with repeated colors allowed on non-adjacent vertices."""
    k, d = c.kd()
    bound = k + (2 * c.q - 1) * d
    c.within(c.vc, 0, bound, f"vertex colors in [0, {bound}]")
    c.proper_vertices()
    if c.q:
        edges = c.induced(kd_mod_sum(k, 2 * c.q * d))
        c.color_set(edges, odd_arithmetic(k, d, c.q), "edge colors = {k+d, k+3d, ..., k+(2q-1)d}")


# =============================================================================
# Parameterized (k,d) total colorings
# =============================================================================


def _ptol_frame(c: Check, y_bound: Optional[int] = None, y_floor: int = 0) -> Optional[tuple[int, int]]:
    """X colors in {0, d, 2d, ...}; Y and edge colors in {k, k+d, ...}."""
    k, d = c.kd()
    sides = c.sides()
    if sides is None:
        return None
    x, y = sides
    for v in sorted(x):
        a = c.vc[v]
        if a < 0 or a % d:
            c.fail("X colors in {0, d, 2d, ...}", (v, a))
            break
    low = k + y_floor * d
    for v in sorted(y):
        b = c.vc[v]
        if b < low or (b - k) % d or (y_bound is not None and b > y_bound):
            c.fail("Y colors in {k, k+d, ...}", (v, b))
            break
    for e, col in zip(c.g.edges, c.ec):
        if col < low or (col - k) % d:
            c.fail("edge colors in {k, k+d, ...}", (e, col))
            break
    return k, d


def _strongly(c: Check) -> Check:
    c.params = {**c.params, "strongly": 1}
    return c


@kind("kd-gracefully-total", domain="total", required=("k", "d"))
def _kd_gracefully_total(c: Check) -> None:
    """f(uv) = |f(u)-f(v)|, f(E) = {k, ..., k+(q-1)d}."""
    frame = _ptol_frame(c, y_bound=None)
    if frame is None:
        return
    k, d = frame
    c.edge_rule(_abs, "f(uv) = |f(u)-f(v)|")
    c.color_set(c.ec, arithmetic(k, d, c.q), "edge colors = {k, k+d, ..., k+(q-1)d}")
    if c.params.get("strongly"):
        c.sum_matching(k + (c.q - 1) * d, "matching sums k+(q-1)d")


@kind("kd-odd-gracefully-total", domain="total", required=("k", "d"))
def _kd_odd_gracefully_total(c: Check) -> None:
    """f(uv) = |f(u)-f(v)|, f(E) = {k+d, k+3d, ..., k+(2q-1)d}."""
    frame = _ptol_frame(c)
    if frame is None:
        return
    k, d = frame
    c.edge_rule(_abs, "f(uv) = |f(u)-f(v)|")
    c.color_set(c.ec, odd_arithmetic(k, d, c.q), "edge colors = {k+d, k+3d, ..., k+(2q-1)d}")
    if c.params.get("strongly"):
        c.sum_matching(k + (2 * c.q - 1) * d, "matching sums k+(2q-1)d")


register("kd-strongly-gracefully-total", lambda c: _kd_gracefully_total(_strongly(c)), domain="total",
         required=("k", "d"), summary="(k,d)-gracefully total with a k+(q-1)d matching")
register("kd-strongly-odd-gracefully-total", lambda c: _kd_odd_gracefully_total(_strongly(c)), domain="total",
         required=("k", "d"), summary="(k,d)-odd-gracefully total with a k+(2q-1)d matching")


@kind("kd-edge-antimagic-total-coloring", domain="total", required=("k", "d"))
def _kd_antimagic_coloring(c: Check) -> None:
    """Edge weights form {2k+2ad, 2k+2(a+1)d, ..., 2k+2(a+q-1)d}."""
    a = int(c.param("a", 0))
    frame = _ptol_frame(c, y_floor=a)
    if frame is None:
        return
    k, d = frame
    weights = [c.vc[u] + e + c.vc[v] for (u, v), e in zip(c.g.edges, c.ec)]
    c.color_set(weights, {2 * k + 2 * (a + i) * d for i in range(c.q)}, "edge weights = {2k+2(a+i)d}")


@kind("kd-harmonious-total", domain="total", required=("k", "d"))
def _kd_harmonious_total(c: Check) -> None:
    """f(uv) - k = (f(u)+f(v)-k) mod qd, f(E) = {k, ..., k+(q-1)d}."""
    frame = _ptol_frame(c)
    if frame is None or not c.q:
        return
    k, d = frame
    c.edge_rule(kd_mod_sum(k, c.q * d), "f(uv) = k + ((f(u)+f(v)-k) mod qd)")
    c.color_set(c.ec, arithmetic(k, d, c.q), "edge colors = {k, k+d, ..., k+(q-1)d}")


@kind("kd-odd-elegant-total", domain="total", required=("k", "d"))
def _kd_odd_elegant_total(c: Check) -> None:
    """f(uv) - k = (f(u)+f(v)-k) mod 2qd, f(E) = {k+d, ..., k+(2q-1)d}."""
    frame = _ptol_frame(c)
    if frame is None or not c.q:
        return
    k, d = frame
    c.edge_rule(kd_mod_sum(k, 2 * c.q * d), "f(uv) = k + ((f(u)+f(v)-k) mod 2qd)")
    c.color_set(c.ec, odd_arithmetic(k, d, c.q), "edge colors = {k+d, k+3d, ..., k+(2q-1)d}")


_MAGIC_VALUES: dict[str, Callable[[int, int, int], int]] = {
    "edge-magic": lambda a, b, e: a + e + b,
    "edge-difference": lambda a, b, e: e + abs(a - b),
    "felicitous-difference": lambda a, b, e: abs(a + b - e),
    "graceful-difference": lambda a, b, e: abs(abs(a - b) - e),
}


def _kd_magic(c: Check, family: str, strongly: bool) -> None:
    frame = _ptol_frame(c)
    if frame is None:
        return
    k, d = frame
    fn = _MAGIC_VALUES[family]
    c.constant([fn(c.vc[u], c.vc[v], e) for (u, v), e in zip(c.g.edges, c.ec)], f"{family} constant", "magic")
    if strongly:
        c.color_set(c.ec, arithmetic(k, d, c.q), "edge colors = {k, k+d, ..., k+(q-1)d}")
        colors = c.side_colors()
        if family == "edge-magic" and colors is not None:
            bound = k + (c.q - 1) * d
            c.within(colors[1], 0, bound, f"Y colors within {bound}")


for _family in _MAGIC_VALUES:
    register(f"strongly-{_family}-kd-total", lambda c, f=_family: _kd_magic(c, f, True), domain="total",
             required=("k", "d"), summary=f"strongly {_family} (k,d)-total coloring")
    register(f"{_family}-kd-total", lambda c, f=_family: _kd_magic(c, f, False), domain="total",
             required=("k", "d"), summary=f"{_family} (k,d)-total coloring")


@kind("kd-gracefully-e-image", domain="total", required=("k", "d"))
def _kd_e_image(c: Check) -> None:
    """Edge colors pairwise distinct, inside {k-(q-1)d, ..., k, ..., k+(q-1)d}."""
    k, d = c.kd()
    c.injective(c.ec, "distinct edge colors", c.g.edges)
    if c.q:
        span = arithmetic(k - (c.q - 1) * d, d, 2 * c.q - 1)
        for edge, e in zip(c.g.edges, c.ec):
            if e not in span:
                c.fail("edge colors in {k-(q-1)d, ..., k+(q-1)d} step d", (edge, e))
                break


# =============================================================================
# Total colorings with a constant (magic family and parameterized)
# =============================================================================


def _magic_coloring(c: Check, family: str, odd: bool) -> None:
    c.non_negative()
    fn = _MAGIC_VALUES[family]
    value = c.constant([fn(c.vc[u], c.vc[v], e) for (u, v), e in zip(c.g.edges, c.ec)], f"{family} constant", "magic")
    if value is not None and family in ("edge-magic", "edge-difference"):
        c.expect(value > 0, "constant is positive", value)
    if odd:
        evens = [e for e in c.ec if e % 2 == 0]
        c.expect(not evens, "every edge color odd", evens[:1])


for _family in _MAGIC_VALUES:
    register(f"{_family}-coloring", lambda c, f=_family: _magic_coloring(c, f, False), domain="total",
             summary=f"{_family} total coloring with constant k")
    register(f"odd-{_family}-coloring", lambda c, f=_family: _magic_coloring(c, f, True), domain="total",
             summary=f"{_family} total coloring with odd edge colors")


_PARAMETERIZED: dict[str, Callable[[int, int, int, int, int, int], int]] = {
    "edge-magic": lambda a, b, c, fu, fv, fe: a * fu + b * fv + c * fe,
    "edge-difference": lambda a, b, c, fu, fv, fe: c * fe + abs(a * fu - b * fv),
    "felicitous-difference": lambda a, b, c, fu, fv, fe: abs(a * fu + b * fv - c * fe),
    "graceful-difference": lambda a, b, c, fu, fv, fe: abs(abs(a * fu - b * fv) - c * fe),
}


def _parameterized(ctx: Check, family: str) -> None:
    a, b, c = (int(ctx.param(n)) for n in ("a", "b", "c"))
    pairs = ctx.oriented()
    if pairs is None:
        return
    fn = _PARAMETERIZED[family]
    ctx.expect(min(ctx.vc + ctx.ec, default=1) >= 1, "colors in [1, M]")
    ctx.proper_total()
    values = [fn(a, b, c, ctx.vc[u], ctx.vc[v], e) for (u, v), e in zip(pairs, ctx.ec)]
    ctx.constant(values, f"parameterized {family} constant", "magic")


for _family in _PARAMETERIZED:
    register(f"parameterized-{_family}", lambda c, f=_family: _parameterized(c, f), domain="total",
             required=("a", "b", "c"), summary=f"parameterized {_family} proper total coloring")


@kind("kl-edge-difference-magically", domain="total", bijective=True)
def _kl_edge_difference(c: Check) -> None:
    """|h(u)-h(v)| = k + lambda h(uv), bijection onto [1, p+q]."""
    lam = int(c.param("lambda", 1))
    if lam == 0:
        raise PreconditionError("lambda must be non-zero")
    c.bijection(1, c.p + c.q, "bijection onto [1, p+q]")
    c.constant([abs(c.vc[u] - c.vc[v]) - lam * e for (u, v), e in zip(c.g.edges, c.ec)], "|h(u)-h(v)| - lambda h(uv) constant", "k")
    if c.params.get("super"):
        c.color_set(c.vc, range(1, c.p + 1), "super: f(V) = [1, p]")


@kind("kl-magic-total", domain="total", required=("k",), bijective=True)
def _kl_magic_total(c: Check) -> None:
    """f(u)+f(v) = k + lambda f(uv), bijection onto [1, p+q]."""
    k, lam = int(c.param("k")), int(c.param("lambda", 1))
    c.bijection(1, c.p + c.q, "bijection onto [1, p+q]")
    for (u, v), e in zip(c.g.edges, c.ec):
        if c.vc[u] + c.vc[v] != k + lam * e:
            c.fail("f(u)+f(v) = k + lambda f(uv)", ((u, v), c.vc[u] + c.vc[v], k + lam * e))
            break


@kind("kd-edge-difference-magically", domain="total", required=("k", "d"))
def _kd_edge_difference_magically(c: Check) -> None:
    """X in {0, d, ...}, Y in {k, ..., k+(q-1)d}, |f(y)-f(x)| = k* + lambda f(xy)."""
    k, d = c.kd()
    lam = int(c.param("lambda", 1))
    colors = c.side_colors()
    if colors is None:
        return
    xs, ys = colors
    c.expect(all(a >= 0 and a % d == 0 for a in xs), "X colors in {0, d, 2d, ...}")
    c.expect(all(b - k in {i * d for i in range(c.q)} for b in ys), "Y colors in {k, ..., k+(q-1)d}")
    value = c.constant([abs(c.vc[u] - c.vc[v]) - lam * e for (u, v), e in zip(c.g.edges, c.ec)], "|f(y)-f(x)| - lambda f(xy) constant", "k_star")
    if value is not None:
        c.expect(value >= 0, "k* >= 0", value)


@kind("totally-kd-sequential", domain="total", required=("k", "d"))
def _totally_kd_sequential(c: Check) -> None:
    """g(xy) = k-d+|g(x)-g(y)|, all colors exactly {k, k+d, ..., k+(p+q-1)d}."""
    k, d = c.kd()
    if k < 1:
        raise PreconditionError("totally (k,d)-sequential needs k >= 1")
    c.edge_rule(lambda a, b: k - d + abs(a - b), "g(xy) = k-d+|g(x)-g(y)|")
    c.color_set(c.vc + c.ec, arithmetic(k, d, c.p + c.q), "colors = {k, k+d, ..., k+(p+q-1)d}")


# =============================================================================
# Gracefully total colorings
# =============================================================================


def _gracefully_total(c: Check, ordered: bool) -> None:
    c.non_negative()
    c.edge_rule(_abs, "f(uv) = |f(u)-f(v)|")
    c.color_set(c.ec, range(1, c.q + 1), "edge colors = [1, q]")
    c.details["distinct_vertex_colors"] = len(set(c.vc))
    if ordered:
        c.set_ordered()


register("gracefully-total", lambda c: _gracefully_total(c, False), domain="total",
         summary="f(uv) = |f(u)-f(v)|, f(E) = [1, q], vertex colors may repeat")
register("set-ordered-gracefully-total", lambda c: _gracefully_total(c, True), domain="total",
         summary="gracefully total coloring with max f(X) < min f(Y)")


def _strictly_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


@kind("gracefully-total-sequence", domain="total", required=("A", "B"))
def _gracefully_total_sequence(c: Check) -> None:
    """Colors from A_M and B_q, adjacent vertices distinct, f(E) = B_q."""
    seq_a = [int(v) for v in c.param("A")]
    seq_b = [int(v) for v in c.param("B")]
    if not _strictly_increasing(seq_a) or (seq_a and seq_a[0] < 0):
        raise PreconditionError("A_M must be strictly increasing and non-negative")
    if not _strictly_increasing(seq_b) or (seq_b and seq_b[0] < 1):
        raise PreconditionError("B_q must be strictly increasing and positive")
    if len(seq_b) != c.q:
        raise PreconditionError(f"B_q has {len(seq_b)} terms for {c.q} edges")
    if len(seq_a) < c.p:
        raise PreconditionError(f"A_M has {len(seq_a)} terms, fewer than p = {c.p}")
    allowed = set(seq_a) | set(seq_b)
    stray = [v for v in c.g.vertices if c.vc[v] not in allowed]
    c.expect(not stray, "vertex colors in A_M or B_q", stray[:1])
    c.proper_vertices()
    c.edge_rule(_abs, "f(uv) = |f(u)-f(v)|")
    c.color_set(c.ec, seq_b, "edge colors = B_q")
    if c.params.get("proper"):
        for (u, v), e in zip(c.g.edges, c.ec):
            if e in (c.vc[u], c.vc[v]):
                c.fail("proper: f(u) != f(uv) != f(v)", (u, v))
                break
    b_set = set(seq_b)
    c.details["sequence_ordered_matching"] = all(0 < b - a and b - a in b_set for a in seq_a for b in seq_b)
