"""Matchings between two labelings.

A matching is a relation one labeling holds with another: twin odd-graceful
pairs, vertex and edge images with a constant sum, (k,d)-harmonious images,
6C-complementary pairs and reciprocal-inverse pairs.
"""

import logging
from typing import Any, Callable

from ..errors import MissingParameterError, PreconditionError, UnknownKindError
from ..graph import Graph
from .kinds import Color, Labeling, VerificationReport, Violation, induce_edge_colors
from .verify import kd_mod_sum, odd_set, verify

log = logging.getLogger(__name__)

MATCHINGS: dict[str, Callable[..., VerificationReport]] = {}


def _matching(tag: str):
    def decorator(fn):
        MATCHINGS[tag] = fn
        return fn

    return decorator


def _edges(g: Graph, lab: Labeling) -> tuple[Color, ...]:
    return lab.edge_colors() if lab.edge is not None else induce_edge_colors(g, lab.vertex, "abs-difference")


def _same_host(ga: Graph, gb: Graph) -> None:
    if ga != gb:
        raise PreconditionError("image matchings compare two labelings of the same graph")


def _constant_sum(tag: str, elements: list, fa: tuple, fb: tuple, name: str, want: Any) -> VerificationReport:
    sums = [a + b for a, b in zip(fa, fb)]
    if not sums:
        return VerificationReport(tag)
    target = sums[0] if want is None else int(want)
    bad = [(e, s) for e, s in zip(elements, sums) if s != target]
    violations = tuple(Violation(f"{name} sum constant", w) for w in bad)
    return VerificationReport(tag, violations, {name: target})


@_matching("twin-odd-graceful")
def _twin(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    if ga.q != gb.q:
        raise PreconditionError(f"twin odd-graceful needs equal edge counts, got {ga.q} and {gb.q}")
    q = ga.q
    parts = [verify(ga, la, "odd-graceful").prefixed("A: ")]
    violations: list[Violation] = []
    eb = _edges(gb, lb)
    if sorted(eb) != sorted(odd_set(q)):
        violations.append(Violation("B: edge colors = [1, 2q-1]^o", sorted(eb)))
    union = set(la.vertex_colors()) | set(lb.vertex_colors())
    stray = sorted(c for c in union if not 0 <= c <= 2 * q - 1)
    if stray:
        violations.append(Violation("vertex colors of both within [0, 2q-1]", stray))
    overlap = set(la.vertex_colors()) & set(lb.vertex_colors())
    parts.append(VerificationReport("twin-odd-graceful", tuple(violations)))
    return VerificationReport.combine("twin-odd-graceful", parts, {"overlap": len(overlap)})


@_matching("v-image")
def _v_image(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    _same_host(ga, gb)
    return _constant_sum("v-image", list(ga.vertices), la.vertex_colors(), lb.vertex_colors(), "k", params.get("k"))


@_matching("e-image")
def _e_image(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    _same_host(ga, gb)
    return _constant_sum("e-image", list(ga.edges), _edges(ga, la), _edges(gb, lb), "k", params.get("k"))


@_matching("kd-harmonious-image")
def _kd_harmonious_image(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    _same_host(ga, gb)
    if "k" not in params or "d" not in params:
        raise MissingParameterError("kd-harmonious-image requires parameters k and d")
    k, d = int(params["k"]), int(params["d"])
    parts = [
        verify(ga, la, "kd-harmonious", k=k, d=d).prefixed("A: "),
        verify(gb, lb, "kd-harmonious", k=k, d=d).prefixed("B: "),
    ]
    rule = kd_mod_sum(k, max(ga.q, 1) * d)
    fa = tuple(rule(la.vertex[u], la.vertex[v]) for u, v in ga.edges)
    fb = tuple(rule(lb.vertex[u], lb.vertex[v]) for u, v in gb.edges)
    parts.append(_constant_sum("kd-harmonious-image", list(ga.edges), fa, fb, "k_image", 2 * k + (ga.q - 1) * d))
    return VerificationReport.combine("kd-harmonious-image", parts, {"k_image": 2 * k + (ga.q - 1) * d})


def _reciprocal_clauses(la: Labeling, lb: Labeling) -> tuple[list[Violation], set[int]]:
    fv, fe = set(la.vertex_colors()), set(la.edge_colors())
    gv, ge = set(lb.vertex_colors()), set(lb.edge_colors())
    common = fv & gv
    violations = []
    if fv - common != ge:
        violations.append(Violation("f(V) - X* = g(E)", sorted(fv - common)))
    if fe != gv - common:
        violations.append(Violation("f(E) = g(V) - X*", sorted(fe)))
    return violations, common


@_matching("6c-complementary")
def _six_c_complementary(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    parts = [verify(ga, la, "6c").prefixed("A: "), verify(gb, lb, "6c").prefixed("B: ")]
    violations, common = _reciprocal_clauses(la, lb)
    z0 = (ga.p + ga.q + 1) // 2
    if common != {z0}:
        violations.append(Violation("X* = {z0}", sorted(common)))
    parts.append(VerificationReport("6c-complementary", tuple(violations)))
    return VerificationReport.combine("6c-complementary", parts, {"common": sorted(common), "singularity": z0})


@_matching("reciprocal-inverse")
def _reciprocal_inverse(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, **params: Any) -> VerificationReport:
    violations, common = _reciprocal_clauses(la, lb)
    if not common:
        violations.insert(0, Violation("X* = f(V) & g(V) nonempty"))
    return VerificationReport("reciprocal-inverse", tuple(violations), {"common": sorted(common)})


def verify_matching(ga: Graph, la: Labeling, gb: Graph, lb: Labeling, kind: str, **params: Any) -> VerificationReport:
    """
    Check that (ga, la) and (gb, lb) form a matching of ``kind``.

    Usage:
        verify_matching(g, f, g, f_star, "e-image").details["k"]
        verify_matching(g, f, g, g2, "v-image", k=7)
    """
    la.check_host(ga)
    lb.check_host(gb)
    try:
        fn = MATCHINGS[kind]
    except KeyError:
        raise UnknownKindError(f"unknown matching {kind!r}; expected one of {sorted(MATCHINGS)}") from None
    report = fn(ga, la, gb, lb, **params)
    log.debug("matching %s: %s", kind, "accepted" if report.accepted else report.violations)
    return report
