"""Labeling values, verification reports and induced edge rules.

A Labeling stores one color per vertex (indexed like the host graph) and,
optionally, one color per edge aligned with ``Graph.edges``. Vertex-only
kinds derive their edge colors from an induced rule; total kinds carry them.
"""

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Any, Callable, Iterable, Mapping, NamedTuple, Optional, Sequence

from ..errors import PreconditionError, VerificationError
from ..graph import Edge, Graph, canonical_edge

Color = int


# =============================================================================
# Labeling
# =============================================================================


@dataclass(frozen=True)
class Labeling:
    """
    Integer colors on the vertices and (optionally) the edges of a graph.

    Usage:
        f = Labeling((0, 3, 1, 2), kind="graceful")
        h = Labeling((1, 2, 3, 4), (3, 4, 5), kind="edge-magic-total")
        f.with_edges(induce_edge_colors(g, f.vertex, "abs-difference"))
    """

    vertex: tuple[Optional[Color], ...]
    edge: Optional[tuple[Optional[Color], ...]] = None
    kind: str = ""
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vertex", tuple(None if c is None else int(c) for c in self.vertex))
        if self.edge is not None:
            object.__setattr__(self, "edge", tuple(None if c is None else int(c) for c in self.edge))
        object.__setattr__(self, "params", dict(self.params))

    @property
    def is_total(self) -> bool:
        return self.edge is not None and None not in self.edge and None not in self.vertex

    def vertex_colors(self) -> tuple[Color, ...]:
        """All vertex colors; raises if any vertex is uncolored."""
        if None in self.vertex:
            raise PreconditionError(f"vertex {self.vertex.index(None)} is uncolored")
        return self.vertex  # type: ignore[return-value]

    def edge_colors(self) -> tuple[Color, ...]:
        if self.edge is None:
            raise PreconditionError("labeling has no edge colors")
        if None in self.edge:
            raise PreconditionError(f"edge #{self.edge.index(None)} is uncolored")
        return self.edge  # type: ignore[return-value]

    def edge_color(self, g: Graph, u: int, v: int) -> Color:
        return self.edge_colors()[g.edge_index[canonical_edge(u, v)]]

    def with_edges(self, edge: Iterable[Color]) -> "Labeling":
        return replace(self, edge=tuple(edge))

    def with_kind(self, kind: str, **params: Any) -> "Labeling":
        return replace(self, kind=kind, params={**self.params, **params})

    def check_host(self, g: Graph) -> None:
        """Every colored element must exist in g."""
        if len(self.vertex) != g.vertex_count:
            raise PreconditionError(f"labeling colors {len(self.vertex)} vertices, graph has {g.vertex_count}")
        if self.edge is not None and len(self.edge) != g.q:
            raise PreconditionError(f"labeling colors {len(self.edge)} edges, graph has {g.q}")

    def colored_edges(self, g: Graph) -> list[tuple[int, int, Color]]:
        """``[(u, v, color), ...]`` in edge-list order."""
        return [(u, v, c) for (u, v), c in zip(g.edges, self.edge_colors())]


# =============================================================================
# Verification report
# =============================================================================


class Violation(NamedTuple):
    condition: str
    witness: Any = None


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of a verification. ``accepted`` holds exactly when there are no
    violations; ``details`` carries derived values such as magic constants.
    """

    kind: str
    violations: tuple[Violation, ...] = ()
    details: Mapping[str, Any] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.accepted

    def raise_for_status(self) -> "VerificationReport":
        if self.violations:
            first = self.violations[0]
            raise VerificationError(f"{self.kind}: {first.condition} (witness {first.witness!r})", report=self)
        return self

    def prefixed(self, prefix: str) -> "VerificationReport":
        return replace(self, violations=tuple(Violation(f"{prefix}{v.condition}", v.witness) for v in self.violations))

    @classmethod
    def combine(cls, kind: str, parts: Sequence["VerificationReport"], details: Optional[Mapping[str, Any]] = None) -> "VerificationReport":
        violations = tuple(v for part in parts for v in part.violations)
        return cls(kind, violations, dict(details or {}))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "accepted": self.accepted,
            "violations": [{"condition": v.condition, "witness": _jsonable(v.witness)} for v in self.violations],
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


# =============================================================================
# Induced edge rules
# =============================================================================

EdgeRule = Callable[[int, int, int], int]

EDGE_RULES: dict[str, EdgeRule] = {
    "abs-difference": lambda a, b, m: abs(a - b),
    "mod-sum": lambda a, b, m: (a + b) % m,
    "plain-sum": lambda a, b, m: a + b,
    "gcd": lambda a, b, m: gcd(a, b),
}


def induce_edge_colors(
    g: Graph,
    vertex_colors: Sequence[Optional[Color]],
    rule: str,
    modulus: Optional[int] = None,
) -> tuple[Color, ...]:
    """
    Color every edge of g from its end colors.

    ``mod-sum`` reduces modulo ``modulus`` (default q).

    Usage:
        induce_edge_colors(path(4), (0, 3, 1, 2), "abs-difference")  # (3, 2, 1)
    """
    try:
        fn = EDGE_RULES[rule]
    except KeyError:
        raise PreconditionError(f"unknown edge rule {rule!r}; expected one of {sorted(EDGE_RULES)}") from None
    if len(vertex_colors) != g.vertex_count:
        raise PreconditionError(f"{len(vertex_colors)} vertex colors for {g.vertex_count} vertices")
    m = g.q if modulus is None else modulus
    if rule == "mod-sum" and m < 1:
        raise PreconditionError("mod-sum needs a positive modulus")
    out = []
    for u, v in g.edges:
        a, b = vertex_colors[u], vertex_colors[v]
        if a is None or b is None:
            raise PreconditionError(f"edge ({u}, {v}) has an uncolored end")
        out.append(fn(a, b, m))
    return tuple(out)


def edge_lookup(g: Graph, lab: Labeling) -> dict[Edge, Color]:
    return dict(zip(g.edges, lab.edge_colors()))
