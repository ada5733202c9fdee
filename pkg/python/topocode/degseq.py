"""Degree sequences: realizability, the operation algebra, Cds-matrix groups
and degree-sequence lattices.

This module provides:
- erdos_gallai: the graphical test
- iter_realizations, realize_brute: exhaustive realization for short sequences
- ds_transform over DS_OPS: increase/decrease, union/subtract,
  component-coincide, decompose/compound, direct-sum, complement,
  self-contract/self-split, degree-coincide, degree-join
- CdsMatrix, CdsGroup, cds_group, cds_add
- ds_lattice_sample: one element of a linear-sum, degree-coincided or
  degree-joined lattice

Every operation returns its output sorted non-increasing, together with the
unsorted sequence the defining formula produces and the position map between
them.
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .config import Settings
from .errors import MatrixShapeError, PreconditionError, SizeLimitError
from .graph import DegreeSequence, Graph

log = logging.getLogger(__name__)

REALIZE_MAX_LENGTH = 8


# =============================================================================
# Realizability
# =============================================================================


def erdos_gallai(d: Sequence[int]) -> bool:
    """
    True iff d is the degree sequence of a simple graph.

    Usage:
        erdos_gallai((3, 3, 3, 3))   # True, K_4
        erdos_gallai((3, 3, 1, 1))   # False
    """
    seq = sorted((int(a) for a in d), reverse=True)
    if any(a < 0 for a in seq) or sum(seq) % 2:
        return False
    n = len(seq)
    prefix = 0
    for k in range(1, n + 1):
        prefix += seq[k - 1]
        if prefix > k * (k - 1) + sum(min(a, k) for a in seq[k:]):
            return False
    return True


def iter_realizations(d: Sequence[int]) -> Iterator[Graph]:
    """
    Every labeled simple graph in which vertex i has degree d[i].

    Vertex v takes its remaining degree from later vertices in every possible
    way, so each labeled graph appears exactly once.
    """
    n = len(d)
    if n > REALIZE_MAX_LENGTH:
        raise SizeLimitError(f"exhaustive realization is limited to {REALIZE_MAX_LENGTH} vertices, got {n}")
    residual = [int(a) for a in d]
    if any(a < 0 for a in residual) or sum(residual) % 2:
        return
    edges: list[tuple[int, int]] = []

    def fill(v: int) -> Iterator[Graph]:
        if v == n:
            yield Graph(n, edges)
            return
        need = residual[v]
        later = [w for w in range(v + 1, n) if residual[w] > 0]
        if need > len(later):
            return
        for chosen in combinations(later, need):
            for w in chosen:
                residual[w] -= 1
                edges.append((v, w))
            residual[v] = 0
            yield from fill(v + 1)
            residual[v] = need
            for w in chosen:
                residual[w] += 1
                edges.pop()

    yield from fill(0)


def realize_brute(d: Sequence[int]) -> Optional[Graph]:
    """
    Some simple graph with degree sequence d, or None.

    Usage:
        realize_brute((2, 2, 2))   # C_3
    """
    return next(iter_realizations(d), None)


# =============================================================================
# Operation algebra
# =============================================================================


class DsResult(NamedTuple):
    """sequence[t] == raw[order[t]]"""

    sequence: DegreeSequence
    raw: tuple[int, ...]
    order: tuple[int, ...]
    graphical: bool

    @classmethod
    def of(cls, raw: Sequence[int]) -> "DsResult":
        raw = tuple(int(a) for a in raw)
        order = tuple(sorted(range(len(raw)), key=lambda t: -raw[t]))
        sequence = tuple(raw[t] for t in order)
        return cls(sequence, raw, order, erdos_gallai(sequence))


DS_OPS: dict[str, Callable[..., tuple[int, ...]]] = {}
BINARY_OPS = frozenset({"union", "subtract", "component-coincide", "direct-sum", "degree-coincide", "degree-join"})


def _op(tag: str):
    def decorator(fn):
        DS_OPS[tag] = fn
        return fn

    return decorator


def _index(d: Sequence[int], i: int, what: str = "component") -> int:
    if not 0 <= i < len(d):
        raise PreconditionError(f"{what} index {i} outside [0, {len(d)})")
    return i


def _rest(d: Sequence[int], used: set[int]) -> list[int]:
    return [a for t, a in enumerate(d) if t not in used]


@_op("increase")
def _increase(d, other=None, *, k: int, positions: Optional[Sequence[int]] = None):
    """d ⊎ (k): add one to k components and append a component k."""
    if not 0 <= k <= len(d):
        raise PreconditionError(f"cannot raise {k} components of a length-{len(d)} sequence")
    if positions is None:
        positions = sorted(range(len(d)), key=lambda t: -d[t])[:k]
    chosen = {_index(d, t) for t in positions}
    if len(chosen) != k:
        raise PreconditionError(f"increase needs {k} distinct positions, got {list(positions)}")
    return tuple(a + 1 if t in chosen else a for t, a in enumerate(d)) + (k,)


@_op("decrease")
def _decrease(d, other=None, *, index: int, positions: Optional[Sequence[int]] = None):
    """d ⊎^-1 (a_i): drop a_i and take one from a_i of the remaining components."""
    _index(d, index)
    k = d[index]
    others = [t for t in range(len(d)) if t != index]
    if positions is None:
        positions = sorted(others, key=lambda t: -d[t])[:k]
    chosen = {_index(d, t) for t in positions}
    if index in chosen or len(chosen) != k:
        raise PreconditionError(f"decrease needs {k} distinct positions other than {index}")
    out = tuple(d[t] - 1 if t in chosen else d[t] for t in others)
    if any(a < 0 for a in out):
        raise PreconditionError("decrease would make a component negative")
    return out


@_op("union")
def _union(d, other):
    return tuple(d) + tuple(other)


@_op("subtract")
def _subtract(d, other):
    """Multiset difference, the inverse of union."""
    left = Counter(d)
    left.subtract(Counter(other))
    if any(n < 0 for n in left.values()):
        raise PreconditionError(f"{tuple(other)} is not a subsequence of {tuple(d)}")
    out = []
    for a in d:
        if left[a] > 0:
            out.append(a)
            left[a] -= 1
    return tuple(out)


@_op("component-coincide")
def _component_coincide(d, other, *, pairs: Optional[Sequence[Sequence[int]]] = None, s: Optional[int] = None):
    """d ⊙_s d': s components of d added to s components of d'."""
    if pairs is None:
        if s is None:
            raise PreconditionError("component-coincide needs pairs or s")
        pairs = [(t, t) for t in range(s)]
    pairs = [(int(i), int(j)) for i, j in pairs]
    if not 1 <= len(pairs) <= min(len(d), len(other)):
        raise PreconditionError(f"s must lie in [1, {min(len(d), len(other))}], got {len(pairs)}")
    left = {_index(d, i) for i, _ in pairs}
    right = {_index(other, j) for _, j in pairs}
    if len(left) != len(pairs) or len(right) != len(pairs):
        raise PreconditionError("coincided components must be distinct on each side")
    return tuple(d[i] + other[j] for i, j in pairs) + tuple(_rest(d, left)) + tuple(_rest(other, right))


@_op("direct-sum")
def _direct_sum(d, other):
    """d + d' = d ⊙_m d' for m = |d'| <= |d|, pairing equal positions."""
    if len(other) > len(d):
        raise PreconditionError("direct-sum needs |d'| <= |d|")
    return _component_coincide(d, other, s=len(other))


@_op("complement")
def _complement(d, other=None):
    n = len(d)
    if any(a > n - 1 for a in d):
        raise PreconditionError(f"components above {n - 1} have no complement")
    return tuple(n - 1 - a for a in d)


@_op("decompose")
def _decompose(d, other=None, *, parts: Mapping[int, Sequence[int]]):
    """∧: replace a_i by parts summing to a_i."""
    for i, pieces in parts.items():
        _index(d, int(i))
        if sum(pieces) != d[int(i)] or any(b < 1 for b in pieces):
            raise PreconditionError(f"parts {list(pieces)} do not decompose component {d[int(i)]}")
    used = {int(i) for i in parts}
    return tuple(_rest(d, used)) + tuple(b for i in sorted(used) for b in parts[i])


@_op("compound")
def _compound(d, other=None, *, groups: Sequence[Sequence[int]]):
    """∨: replace each group of components by its sum."""
    used: set[int] = set()
    for group in groups:
        for t in group:
            if _index(d, int(t)) in used:
                raise PreconditionError(f"component {t} appears in two groups")
            used.add(int(t))
    return tuple(sum(d[int(t)] for t in group) for group in groups) + tuple(_rest(d, used))


@_op("self-contract")
def _self_contract(d, other=None):
    """⊙_1: (a_1 + a_2, a_3, ..., a_p)."""
    if len(d) < 2:
        raise PreconditionError("self-contraction needs at least two components")
    return (d[0] + d[1],) + tuple(d[2:])


@_op("self-split")
def _self_split(d, other=None, *, part: int):
    """∧_1: a_1 becomes (part, a_1 - part)."""
    if not d or not 1 <= part < d[0]:
        raise PreconditionError(f"cannot split a first component of {d[0] if d else None} at {part}")
    return (part, d[0] - part) + tuple(d[1:])


@_op("degree-coincide")
def _degree_coincide(d, other, *, i: int = 0, j: int = 0):
    """⊙<d, d'>: the other components in order, then a_i + c_j."""
    _index(d, i)
    _index(other, j)
    return tuple(_rest(d, {i})) + tuple(_rest(other, {j})) + (d[i] + other[j],)


@_op("degree-join")
def _degree_join(d, other, *, i: int = 0, j: int = 0):
    """⊖<d, d'>: one new edge between a_i and c_j."""
    _index(d, i)
    _index(other, j)
    return tuple(a + (t == i) for t, a in enumerate(d)) + tuple(c + (t == j) for t, c in enumerate(other))


def ds_transform(d: Sequence[int], op: str, other: Optional[Sequence[int]] = None, **args: Any) -> DsResult:
    """
    Apply one degree-sequence operation.

    Indices in ``args`` refer to positions of the sequences as given.

    Usage:
        ds_transform((3, 2, 2, 1), "increase", k=4).sequence            # (4, 4, 3, 3, 2)
        ds_transform((4, 3, 2, 2, 1), "component-coincide", (3, 3, 2, 2, 2), s=2).sequence
        ds_transform((2, 1, 1), "self-contract").sequence               # (3, 1)
    """
    try:
        fn = DS_OPS[op]
    except KeyError:
        raise PreconditionError(f"unknown degree-sequence operation {op!r}; expected one of {sorted(DS_OPS)}") from None
    d = tuple(int(a) for a in d)
    if op in BINARY_OPS:
        if other is None:
            raise PreconditionError(f"operation {op!r} needs a second sequence")
        result = DsResult.of(fn(d, tuple(int(a) for a in other), **args))
    else:
        result = DsResult.of(fn(d, None, **args))
    log.debug("ds %s %s -> %s (graphical=%s)", op, d, result.sequence, result.graphical)
    return result


# =============================================================================
# Cds-matrices and every-zero groups
# =============================================================================


@dataclass(frozen=True)
class CdsMatrix:
    """A degree sequence with a color under each component."""

    degrees: DegreeSequence
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.degrees) != len(self.colors):
            raise MatrixShapeError(f"{len(self.degrees)} degrees but {len(self.colors)} colors")
        if not self.degrees:
            raise MatrixShapeError("a Cds-matrix needs at least one column")

    @property
    def graphical(self) -> bool:
        return erdos_gallai(self.degrees)

    def rows(self) -> list[list[int]]:
        return [list(self.degrees), list(self.colors)]


@dataclass(frozen=True)
class CdsGroup:
    """
    Members f_r = f_1 + r (mod M) for r in [0, M-1], colors kept in [1, M].

    Any member can serve as the zero: f_i ⊕ f_j = f_{i+j-k} under zero f_k.

    Usage:
        grp = cds_group(CdsMatrix((2, 1, 1), (1, 2, 1)))
        grp.modulus              # 2
        cds_add(grp, 0, 1, 0)    # 1
    """

    base: CdsMatrix
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError(f"group modulus must be positive, got {self.modulus}")

    def _check(self, r: int) -> None:
        if not 0 <= r < self.modulus:
            raise PreconditionError(f"member index {r} outside [0, {self.modulus - 1}]")

    def _wrap(self, c: int) -> int:
        return (c - 1) % self.modulus + 1

    def element(self, r: int) -> CdsMatrix:
        self._check(r)
        return CdsMatrix(self.base.degrees, tuple(self._wrap(c + r) for c in self.base.colors))

    def elements(self) -> list[CdsMatrix]:
        return [self.element(r) for r in range(self.modulus)]

    def combine(self, i: int, j: int, zero: int) -> CdsMatrix:
        """Componentwise f_i(a) + f_j(a) - f_k(a), reduced into [1, M]."""
        a, b, c = (self.element(r).colors for r in (i, j, zero))
        return CdsMatrix(self.base.degrees, tuple(self._wrap(x + y - z) for x, y, z in zip(a, b, c)))

    def index_of(self, m: CdsMatrix) -> int:
        for r in range(self.modulus):
            if self.element(r) == m:
                return r
        raise PreconditionError("matrix is not a member of the group")


def cds_group(base: CdsMatrix, modulus: Optional[int] = None) -> CdsGroup:
    """The every-zero group of ``base``; M defaults to the largest degree."""
    return CdsGroup(base, max(base.degrees) if modulus is None else modulus)


def cds_add(group: CdsGroup, i: int, j: int, zero: int) -> int:
    """lambda = i + j - k (mod M), with the componentwise color identity checked."""
    for r in (i, j, zero):
        group._check(r)
    lam = (i + j - zero) % group.modulus
    if group.combine(i, j, zero) != group.element(lam):
        raise PreconditionError(f"componentwise identity fails for ({i}, {j}; zero {zero})")
    return lam


# =============================================================================
# Degree-sequence lattices
# =============================================================================

LATTICE_OPS = ("linear-sum", "degree-coincide", "degree-join")


def ds_lattice_sample(
    base: Sequence[Sequence[int]],
    coeffs: Sequence[int],
    op: str = "linear-sum",
    seed: Optional[int] = None,
) -> DsResult:
    """
    One element of the lattice spanned by ``base`` with coefficients ``coeffs``.

    linear-sum adds the base sequences componentwise, coeffs[k] times each.
    degree-coincide and degree-join chain coeffs[k] copies of every base
    sequence through the binary operation, picking the glued components with
    a seeded random generator.

    Usage:
        ds_lattice_sample([(2, 2, 2)], [2]).sequence                     # (4, 4, 4)
        ds_lattice_sample([(1, 1)], [2], "degree-coincide").sequence     # (2, 1, 1)
    """
    if not base:
        raise PreconditionError("lattice base is empty")
    if len(coeffs) != len(base):
        raise PreconditionError(f"{len(coeffs)} coefficients for {len(base)} base sequences")
    if any(c < 0 for c in coeffs) or sum(coeffs) < 1:
        raise PreconditionError("coefficients must be non-negative with a positive sum")
    if op not in LATTICE_OPS:
        raise PreconditionError(f"unknown lattice operation {op!r}; expected one of {LATTICE_OPS}")

    if op == "linear-sum":
        n = len(base[0])
        if any(len(b) != n for b in base):
            raise MatrixShapeError("linear sums need base sequences of one length")
        return DsResult.of([sum(c * b[t] for c, b in zip(coeffs, base)) for t in range(n)])

    rng = random.Random(Settings().seed if seed is None else seed)
    copies = [tuple(b) for b, c in zip(base, coeffs) for _ in range(c)]
    acc = copies[0]
    for nxt in copies[1:]:
        i, j = rng.randrange(len(acc)), rng.randrange(len(nxt))
        acc = DS_OPS[op](acc, nxt, i=i, j=j)
    return DsResult.of(acc)
