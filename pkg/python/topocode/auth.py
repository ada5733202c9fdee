"""Topological authentication.

This module provides:
- KeyBundle: a (string, Topcode-matrix, graph, labeling) key together with
  the Vo line-way that reads the matrix into the string
- derive_bundle: build a bundle from a verified labeling
- TransformSpec: per-row affine maps plus the relation required between the
  two graphs
- authenticate: check a public bundle against a private one
- authenticate_vector: componentwise authentication of key vectors, in
  parallel legs or as a chain

A report names the leg that failed:
    bundle  the bundle is not internally consistent
    (a)     the graph relation does not hold
    (b)     the transform does not carry the public matrix onto the private one
    (c)     a string does not regenerate from its matrix
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Any, NamedTuple, Optional, Sequence, Union

from .config import Settings
from .errors import FormatError, PreconditionError, SizeLimitError
from .formats import (
    graph_from_dict,
    graph_to_dict,
    labeling_from_dict,
    labeling_to_dict,
    pack_frame,
    read_records,
)
from .graph import Graph, isomorphism
from .labelings import Labeling, VerificationReport, Violation, induce_edge_colors, verify, verify_matching
from .strings import NumberString, parse, vo_string
from .topcode import TopcodeMatrix, from_colored_graph

log = logging.getLogger(__name__)

HOMOMORPHISM_LIMIT = 8
RELATIONS = ("identity", "isomorphism", "homomorphism")


# =============================================================================
# Key bundles
# =============================================================================


def _colored(g: Graph, lab: Labeling, edge_rule: Optional[str]) -> Labeling:
    if lab.edge is not None:
        return lab
    return lab.with_edges(induce_edge_colors(g, lab.vertex, edge_rule or "abs-difference"))


@dataclass(frozen=True)
class KeyBundle:
    """
    A public or private key.

    ``edge_rule`` induces edge colors when the labeling colors vertices only.

    Usage:
        b = derive_bundle(star(3), Labeling((1, 2, 3, 4), kind="super-felicitous"), "vo1", edge_rule="plain-sum")
        b.string.render(digits=True)   # "111543234"
    """

    string: NumberString
    matrix: TopcodeMatrix
    graph: Graph
    labeling: Labeling
    vo_algo: str = "vo1"
    edge_rule: Optional[str] = None

    def colored(self) -> Labeling:
        return _colored(self.graph, self.labeling, self.edge_rule)

    def consistency(self) -> VerificationReport:
        """Matrix against graph and labeling, and the labeling against its kind."""
        violations: list[Violation] = []
        expected = from_colored_graph(self.graph, self.colored())
        if not expected.same_columns(self.matrix):
            violations.append(Violation("matrix = T_code(graph, labeling)", sorted(set(expected.columns) ^ set(self.matrix.columns))))
        report = verify(self.graph, self.labeling)
        return VerificationReport.combine("bundle", [VerificationReport("bundle", tuple(violations)), report])

    def to_dict(self) -> dict:
        data = {
            "graph": graph_to_dict(self.graph),
            "labeling": labeling_to_dict(self.graph, self.labeling),
            "matrix": self.matrix.to_dict(),
            "string": self.string.render(),
            "vo_algo": self.vo_algo,
        }
        if self.edge_rule is not None:
            data["edge_rule"] = self.edge_rule
        return data

    @classmethod
    def from_dict(cls, data: Any, source: str = "bundle") -> "KeyBundle":
        if not isinstance(data, dict):
            raise FormatError(f"{source}: a bundle is an object")
        missing = {"graph", "labeling", "matrix", "string", "vo_algo"} - data.keys()
        if missing:
            raise FormatError(f"{source}: missing {sorted(missing)}")
        g = graph_from_dict(data["graph"], f"{source}.graph")
        return cls(
            string=parse(str(data["string"])),
            matrix=TopcodeMatrix.from_dict(data["matrix"]),
            graph=g,
            labeling=labeling_from_dict(data["labeling"], g, f"{source}.labeling"),
            vo_algo=str(data["vo_algo"]),
            edge_rule=data.get("edge_rule"),
        )


def derive_bundle(g: Graph, lab: Labeling, vo_algo: str = "vo1", edge_rule: Optional[str] = None) -> KeyBundle:
    """
    Verify ``lab`` under its declared kind, then derive the matrix and string.

    Usage:
        derive_bundle(path(2), Labeling((0, 1), kind="graceful"), "vo4").string.render(digits=True)   # "011"
    """
    verify(g, lab).raise_for_status()
    matrix = from_colored_graph(g, _colored(g, lab, edge_rule))
    bundle = KeyBundle(vo_string(matrix, vo_algo), matrix, g, lab, vo_algo, edge_rule)
    log.debug("derived %s bundle: %d tokens", lab.kind, len(bundle.string))
    return bundle


def save_bundles(path: Union[str, Path], bundles: Sequence[KeyBundle], binary: bool = False) -> None:
    """JSON (a single object or a list) or a stream of msgpack frames."""
    records = [b.to_dict() for b in bundles]
    if binary:
        Path(path).write_bytes(b"".join(pack_frame(r) for r in records))
    else:
        Path(path).write_text(json.dumps(records[0] if len(records) == 1 else records, indent=2) + "\n")


def load_bundles(path: Union[str, Path]) -> list[KeyBundle]:
    return [KeyBundle.from_dict(r, f"{path}[{i}]") for i, r in enumerate(read_records(path))]


# =============================================================================
# Transforms
# =============================================================================


class Affine(NamedTuple):
    a: int = 1
    b: int = 0

    def __call__(self, w: int) -> int:
        return self.a * w + self.b

    def inverse(self) -> "Affine":
        if self.a not in (1, -1):
            raise PreconditionError(f"w -> {self.a}w + {self.b} has no integer inverse")
        return Affine(self.a, -self.a * self.b)


@dataclass(frozen=True)
class TransformSpec:
    """
    Row maps X: x -> a x + b, E and Y likewise, and the graph relation.

    Usage:
        TransformSpec.doubling().apply(t_code_3164)   # the odd-graceful matrix
    """

    x: Affine = field(default_factory=Affine)
    e: Affine = field(default_factory=Affine)
    y: Affine = field(default_factory=Affine)
    relation: str = "isomorphism"

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise PreconditionError(f"unknown graph relation {self.relation!r}; expected one of {RELATIONS}")
        for name in ("x", "e", "y"):
            part = getattr(self, name)
            if not all(isinstance(c, int) for c in part):
                raise PreconditionError(f"{name} coefficients must be integers, got {tuple(part)}")
            object.__setattr__(self, name, Affine(*part))

    @classmethod
    def identity(cls, relation: str = "isomorphism") -> "TransformSpec":
        return cls(relation=relation)

    @classmethod
    def doubling(cls) -> "TransformSpec":
        """X: x -> 2x; E and Y: w -> 2w - 1. Graceful to odd-graceful."""
        return cls(Affine(2, 0), Affine(2, -1), Affine(2, -1))

    def apply(self, m: TopcodeMatrix) -> TopcodeMatrix:
        return TopcodeMatrix(tuple(map(self.x, m.x)), tuple(map(self.e, m.e)), tuple(map(self.y, m.y)))

    def inverse(self) -> "TransformSpec":
        return TransformSpec(self.x.inverse(), self.e.inverse(), self.y.inverse(), self.relation)

    def to_dict(self) -> dict:
        return {"x": list(self.x), "e": list(self.e), "y": list(self.y), "relation": self.relation}

    @classmethod
    def from_dict(cls, data: Any) -> "TransformSpec":
        if not isinstance(data, dict):
            raise FormatError("a transform spec is an object")
        try:
            parts = {k: Affine(*(int(c) for c in data.get(k, (1, 0)))) for k in ("x", "e", "y")}
        except (TypeError, ValueError) as e:
            raise FormatError(f"malformed transform spec: {e}") from e
        return cls(relation=str(data.get("relation", "isomorphism")), **parts)


# =============================================================================
# Graph relations
# =============================================================================


def _color_map(pub: KeyBundle, priv: KeyBundle) -> Optional[list[int]]:
    """The vertex map induced by matching matrix columns, when it is well defined."""
    pc, qc = pub.labeling.vertex, priv.labeling.vertex
    if None in pc or None in qc or len(set(pc)) != len(pc) or len(set(qc)) != len(qc):
        return None
    if pub.matrix.q != priv.matrix.q:
        return None
    pub_at = {c: v for v, c in enumerate(pc)}
    priv_at = {c: v for v, c in enumerate(qc)}
    mapping: dict[int, int] = {}
    for (x, _, y), (x2, _, y2) in zip(pub.matrix.columns, priv.matrix.columns):
        for a, b in ((x, x2), (y, y2)):
            if a not in pub_at or b not in priv_at:
                return None
            u, w = pub_at[a], priv_at[b]
            if mapping.setdefault(u, w) != w:
                return None
    if len(mapping) != pub.graph.p or len(set(mapping.values())) != len(mapping):
        return None
    return [mapping[v] for v in pub.graph.vertices]


def _preserves_edges(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    return all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)


def homomorphism(g: Graph, h: Graph, limit: int = HOMOMORPHISM_LIMIT) -> Optional[list[int]]:
    """A map V(g) -> V(h) sending every edge to an edge, by exhaustive search."""
    if max(g.p, h.p) > limit:
        raise SizeLimitError(f"brute-force homomorphism is limited to {limit} vertices")
    for phi in product(h.vertices, repeat=g.p):
        if _preserves_edges(g, h, phi):
            return list(phi)
    return None


def _relation(pub: KeyBundle, priv: KeyBundle, relation: str, limit: int) -> VerificationReport:
    g, h = pub.graph, priv.graph
    if relation == "identity":
        ok = g == h
        witness: Any = None
    elif relation == "isomorphism":
        phi = list(g.vertices) if g == h else _color_map(pub, priv)
        if phi is not None and not (g.p == h.p and g.q == h.q and _preserves_edges(g, h, phi)):
            phi = None
        if phi is None:
            phi = isomorphism(g, h, limit)
        ok, witness = phi is not None, phi
    else:
        phi = homomorphism(g, h)
        ok, witness = phi is not None, phi
    violations = () if ok else (Violation(f"(a) graphs related by {relation}", (g.p, g.q, h.p, h.q)),)
    return VerificationReport("authentication", violations, {"witness": witness})


# =============================================================================
# Authentication
# =============================================================================


def _regenerates(bundle: KeyBundle, who: str) -> list[Violation]:
    fresh = vo_string(bundle.matrix, bundle.vo_algo)
    if fresh == bundle.string:
        return []
    mismatch = next((i for i, (a, b) in enumerate(zip(fresh.tokens, bundle.string.tokens)) if a != b), None)
    if mismatch is None:
        mismatch = min(len(fresh), len(bundle.string))
    return [Violation(f"(c) {who} string regenerates from its matrix", mismatch)]


def authenticate(pub: KeyBundle, priv: KeyBundle, spec: TransformSpec, *, limit: Optional[int] = None) -> VerificationReport:
    """
    Accept when the graphs are related as ``spec`` asks, ``spec`` maps the
    public matrix onto the private one entry by entry, and both strings
    regenerate from their matrices.

    Usage:
        authenticate(pub, priv, TransformSpec.doubling()).accepted
    """
    limit = Settings().brute_force_limit if limit is None else limit
    parts = [pub.consistency().prefixed("bundle: pub: "), priv.consistency().prefixed("bundle: priv: ")]
    relation = _relation(pub, priv, spec.relation, limit)
    parts.append(relation)

    mapped = spec.apply(pub.matrix)
    cells: list[Violation] = []
    if mapped.q != priv.matrix.q:
        cells.append(Violation("(b) matrices have the same order", (pub.matrix.q, priv.matrix.q)))
    else:
        for r, (want_row, have_row) in enumerate(zip(mapped.rows(), priv.matrix.rows())):
            for j, (want, have) in enumerate(zip(want_row, have_row)):
                if want != have:
                    cells.append(Violation("(b) transform maps the public matrix onto the private one", ("XEY"[r], j, want, have)))
    parts.append(VerificationReport("authentication", tuple(cells)))
    parts.append(VerificationReport("authentication", tuple(_regenerates(pub, "pub") + _regenerates(priv, "priv"))))

    report = VerificationReport.combine("authentication", parts, {"relation": spec.relation, "witness": relation.details["witness"]})
    log.debug("authenticate: %s", "accepted" if report.accepted else report.violations[0].condition)
    return report


Leg = Union[TransformSpec, str, tuple[str, dict]]


def _leg(pub: KeyBundle, priv: KeyBundle, op: Leg, limit: Optional[int]) -> VerificationReport:
    if isinstance(op, TransformSpec):
        return authenticate(pub, priv, op, limit=limit)
    kind, params = (op, {}) if isinstance(op, str) else op
    return verify_matching(pub.graph, pub.labeling, priv.graph, priv.labeling, kind, **params)


def authenticate_vector(
    pubs: Sequence[KeyBundle],
    privs: Sequence[KeyBundle],
    ops: Sequence[Leg],
    *,
    chain: bool = False,
    max_workers: Optional[int] = None,
    limit: Optional[int] = None,
) -> VerificationReport:
    """
    One leg per (pub_i, priv_i, op_i). An op is a TransformSpec or a matching
    kind (optionally with parameters). Legs run on a thread pool and are
    merged in order.

    In chain mode ``pubs`` holds only the head; leg i pairs priv_{i-1}
    (or the head) with priv_i, and legs run in sequence.
    """
    if not privs:
        raise PreconditionError("a key vector needs at least one leg")
    if len(ops) != len(privs):
        raise PreconditionError(f"{len(privs)} private keys but {len(ops)} operations")
    if chain:
        if len(pubs) != 1:
            raise PreconditionError("chain mode takes exactly one public key")
        heads = [pubs[0], *privs[:-1]]
        reports = [_leg(a, b, op, limit) for a, b, op in zip(heads, privs, ops)]
    else:
        if len(pubs) != len(privs):
            raise PreconditionError(f"{len(pubs)} public keys but {len(privs)} private keys")
        workers = max_workers or Settings().max_workers
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda leg: _leg(*leg, limit), zip(pubs, privs, ops)))
    parts = [r.prefixed(f"leg {i}: ") for i, r in enumerate(reports)]
    return VerificationReport.combine("authentication-vector", parts, {"legs": [r.accepted for r in reports], "chain": chain})
