"""Number-based strings: generation from matrices, operations and partitions.

This module provides:
- NumberString, render, parse, reciprocal, digit_dual
- vo_string: the four Topcode-matrix line-ways Vo1..Vo4 with their r and i forms
- tb_string: the four general-matrix traversals VoI..VoIV with r and i forms
- string_op: [+], [-], [x], interleave and mix on equal-length strings
- StringFamily, string_group_add: every-zero string groups
- pnbspp_solve: desk-scale parameterized string partition

A NumberString keeps its tokens, so the token rendering is lossless. The digit
rendering concatenates tokens and forgets where one ended and the next began.
"""

import logging
import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import FormatError, MatrixShapeError, PreconditionError, SizeLimitError
from .topcode import TopcodeMatrix, is_graphicable

log = logging.getLogger(__name__)

PNBSPP_MAX_Q = 5
PNBSPP_MAX_CUTS = 2_000_000


# =============================================================================
# NumberString
# =============================================================================


@dataclass(frozen=True)
class NumberString:
    """
    A sequence of non-negative integer tokens.

    Usage:
        s = NumberString((1, 12, 3))
        s.render()             # "1 12 3"
        s.render(digits=True)  # "1123"
    """

    tokens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(int(t) for t in self.tokens))
        if any(t < 0 for t in self.tokens):
            raise PreconditionError("number-based string tokens are non-negative")

    @classmethod
    def from_digits(cls, text: str) -> "NumberString":
        if not text.isdigit():
            raise FormatError(f"not a digit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def is_digit_form(self) -> bool:
        return all(t <= 9 for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return self.render(digits=self.is_digit_form)

    def render(self, digits: bool = False, sep: str = " ") -> str:
        if digits:
            return "".join(str(t) for t in self.tokens)
        return sep.join(str(t) for t in self.tokens)

    def as_digits(self) -> "NumberString":
        """Digit form of the concatenated rendering (lossy for tokens >= 10)."""
        return NumberString.from_digits(self.render(digits=True)) if self.tokens else self


def render(s: NumberString, digits: bool = False) -> str:
    return s.render(digits=digits)


_SEPARATORS = re.compile(r"[\s,;]+")


def parse(text: str) -> NumberString:
    """
    Parse a rendering: separated tokens when the text has separators
    (whitespace, comma or semicolon), otherwise one digit per character.
    """
    text = text.strip()
    if not text:
        return NumberString(())
    if _SEPARATORS.search(text):
        parts = [p for p in _SEPARATORS.split(text) if p]
        if not all(p.isdigit() for p in parts):
            raise FormatError(f"not a token string: {text!r}")
        return NumberString(tuple(int(p) for p in parts))
    return NumberString.from_digits(text)


def reciprocal(s: NumberString) -> NumberString:
    """c_n ... c_2 c_1"""
    return NumberString(s.tokens[::-1])


def digit_dual(s: NumberString) -> NumberString:
    """9 - c_i per digit."""
    if not s.is_digit_form:
        raise PreconditionError("digit dual needs every token in [0, 9]")
    return NumberString(tuple(9 - t for t in s.tokens))


# =============================================================================
# Vo algorithms on Topcode-matrices
# =============================================================================

Cell = tuple[int, int]  # (row, column); rows 0 = X, 1 = E, 2 = Y
X, E, Y = 0, 1, 2


def _vo1(q: int) -> list[Cell]:
    """x_1..x_q, e_q..e_1, y_1..y_q"""
    return [(X, j) for j in range(q)] + [(E, j) for j in reversed(range(q))] + [(Y, j) for j in range(q)]


def _vo2(q: int) -> list[Cell]:
    """x_1 e_1 y_1 y_2 e_2 x_2 x_3 e_3 y_3 ...: columns alternate direction."""
    cells = []
    for j in range(q):
        rows = (X, E, Y) if j % 2 == 0 else (Y, E, X)
        cells += [(r, j) for r in rows]
    return cells


def _vo3(q: int) -> list[Cell]:
    """
    Diagonal zigzag with X trailing one column behind Y:

        y_2 y_1 e_1 x_1 e_2 | y_3 y_4 e_3 x_2 x_3 e_4 | y_5 y_6 e_5 x_4 x_5 e_6 | ...

    Each later block over columns (c, c+1) emits y_c y_{c+1} e_c x_{c-1} x_c
    and closes with x_q e_q when c+1 is the last column; indices past q drop.
    """
    if q == 1:
        return [(Y, 0), (E, 0), (X, 0)]
    cells = [(Y, 1), (Y, 0), (E, 0), (X, 0), (E, 1)]
    c = 2
    while c < q:
        block = [(Y, c), (Y, c + 1), (E, c), (X, c - 1), (X, c)]
        if c + 1 == q - 1:
            block.append((X, q - 1))
        block.append((E, c + 1))
        cells += [(r, j) for r, j in block if j < q]
        c += 2
    if q == 2:
        cells.append((X, 1))
    return cells


def _vo4(q: int) -> list[Cell]:
    """x_1 e_1 y_1 x_2 e_2 y_2 ... x_q e_q y_q"""
    return [(r, j) for j in range(q) for r in (X, E, Y)]


_VO = {"vo1": _vo1, "vo2": _vo2, "vo3": _vo3, "vo4": _vo4}


def _swap_xy(cells: list[Cell]) -> list[Cell]:
    return [({X: Y, Y: X}.get(r, r), j) for r, j in cells]


def _mirror(cells: list[Cell], q: int) -> list[Cell]:
    return [(r, q - 1 - j) for r, j in cells]


def _split_algo(algo: str, families: Sequence[str]) -> tuple[str, str]:
    key = algo.lower().replace("-", "").replace("_", "")
    if key in families:
        return key, "plain"
    for base in families:
        if key in (base + "r", base + "i"):
            return base, key[-1]
    raise PreconditionError(f"unknown algorithm {algo!r}; expected one of {list(families)} with optional -r or -i")


def vo_cells(q: int, algo: str) -> list[Cell]:
    """
    The (row, column) visiting order of a Vo line-way on a 3 x q matrix.

    The r form swaps the roles of X and Y; the i form runs the columns
    from q down to 1, except Vo1-i which reads x_q..x_1 e_1..e_q y_q..y_1.
    """
    base, variant = _split_algo(algo, tuple(_VO))
    cells = _VO[base](q)
    if variant == "r":
        if base == "vo1":
            cells = [(Y, j) for j in range(q)] + [(E, j) for j in reversed(range(q))] + [(X, j) for j in range(q)]
        else:
            cells = _swap_xy(cells)
    elif variant == "i":
        cells = _mirror(cells, q)
    return cells


def vo_string(m: TopcodeMatrix, algo: str = "vo1") -> NumberString:
    """
    Read a Topcode-matrix into a number-based string.

    Usage:
        vo_string(t_s1, "vo1").render(digits=True)    # "111543234"
        vo_string(t_s1, "vo4-i")
    """
    if m.q == 0:
        raise MatrixShapeError("cannot read an empty matrix")
    rows = m.rows()
    return NumberString(tuple(rows[r][j] for r, j in vo_cells(m.q, algo)))


# =============================================================================
# Tb algorithms on general matrices
# =============================================================================


def _serpentine_rows(m: int, n: int, start_row_reversed: bool = False) -> list[Cell]:
    out = []
    for k, i in enumerate(range(m)):
        cols = range(n) if (k % 2 == 0) != start_row_reversed else reversed(range(n))
        out += [(i, j) for j in cols]
    return out


def _zigzag(m: int, n: int) -> list[Cell]:
    """Anti-diagonals from (0, 0): odd diagonals run down-left, even ones up-right."""
    out = []
    for s in range(m + n - 1):
        rows = range(max(0, s - n + 1), min(s, m - 1) + 1)
        ordered = reversed(rows) if s % 2 else rows
        out += [(i, s - i) for i in ordered]
    return out


def tb_cells(m: int, n: int, algo: str) -> list[Cell]:
    """
    Visiting order of a Tb traversal on an m x n matrix.

    - VoI: rows serpentine from the top (r: from the bottom row;
      i: the first row right to left)
    - VoII: columns serpentine from the left (r: first column bottom-up;
      i: from the last column)
    - VoIII: diagonal zigzag from the bottom-left corner (r: from the top-left;
      i: from the bottom-right)
    - VoIV: column-major (r: each column bottom-up; i: columns right to left)
    """
    base, variant = _split_algo(algo, ("voi", "voii", "voiii", "voiv"))
    if base in ("voi", "voii") and (m < 2 or n < 2):
        raise MatrixShapeError(f"{algo} needs at least a 2 x 2 matrix, got {m} x {n}")
    if m < 1 or n < 1:
        raise MatrixShapeError("cannot traverse an empty matrix")

    if base == "voi":
        if variant == "r":
            return [(m - 1 - i, j) for i, j in _serpentine_rows(m, n)]
        return _serpentine_rows(m, n, start_row_reversed=variant == "i")
    if base == "voii":
        cols = [(j, i) for i, j in _serpentine_rows(n, m)]
        if variant == "r":
            return [(m - 1 - i, j) for i, j in cols]
        if variant == "i":
            return [(i, n - 1 - j) for i, j in cols]
        return cols
    if base == "voiii":
        if variant == "r":
            return _zigzag(m, n)
        if variant == "i":
            return _zigzag(m, n)[::-1]
        return [(m - 1 - i, j) for i, j in _zigzag(m, n)]
    column_major = [(i, j) for j in range(n) for i in range(m)]
    if variant == "r":
        return [(m - 1 - i, j) for i, j in column_major]
    if variant == "i":
        return [(i, n - 1 - j) for i, j in column_major]
    return column_major


def tb_string(a: Sequence[Sequence[int]], algo: str = "voi") -> NumberString:
    """
    Read a general integer matrix along a Tb traversal.

    Usage:
        tb_string([[1, 2], [3, 4]], "voi").render(digits=True)   # "1243"
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise MatrixShapeError("rows have different lengths")
    return NumberString(tuple(a[i][j] for i, j in tb_cells(m, n, algo)))


# =============================================================================
# String operations
# =============================================================================

STRING_OPS = ("plus", "minus", "times", "interleave", "mix")


def _permute(tokens: tuple[int, ...], perm: Optional[Sequence[int]]) -> tuple[int, ...]:
    if perm is None:
        return tokens
    if sorted(perm) != list(range(len(tokens))):
        raise PreconditionError(f"{list(perm)} is not a permutation of 0..{len(tokens) - 1}")
    return tuple(tokens[i] for i in perm)


def string_op(
    a: NumberString,
    b: NumberString,
    op: str,
    perm_a: Optional[Sequence[int]] = None,
    perm_b: Optional[Sequence[int]] = None,
    mask: Optional[Sequence[bool]] = None,
) -> NumberString:
    """
    O<A, B> on chosen permutations a' and b' (identity by default).

    ``plus``, ``minus`` and ``times`` give a'_i + b'_i, |a'_i - b'_i| and
    a'_i b'_i; ``interleave`` gives a'_1 b'_1 a'_2 b'_2 ...; ``mix`` takes
    z_i = a'_i where ``mask[i]`` is true and b'_i elsewhere (alternating by
    default) and needs tokens from both strings. Results may hold tokens
    above 9.

    Usage:
        string_op(parse("12"), parse("34"), "plus").render(digits=True)   # "46"
    """
    if len(a) != len(b):
        raise PreconditionError(f"strings have lengths {len(a)} and {len(b)}")
    x, y = _permute(a.tokens, perm_a), _permute(b.tokens, perm_b)
    if op == "plus":
        return NumberString(tuple(u + v for u, v in zip(x, y)))
    if op == "minus":
        return NumberString(tuple(abs(u - v) for u, v in zip(x, y)))
    if op == "times":
        return NumberString(tuple(u * v for u, v in zip(x, y)))
    if op == "interleave":
        return NumberString(tuple(t for pair in zip(x, y) for t in pair))
    if op == "mix":
        picks = list(mask) if mask is not None else [i % 2 == 0 for i in range(len(x))]
        if len(picks) != len(x):
            raise PreconditionError("mix mask length differs from the strings")
        z = tuple(u if take else v for u, v, take in zip(x, y, picks))
        if not (set(z) & set(x) and set(z) & set(y)):
            raise PreconditionError("mix result must share tokens with both strings")
        return NumberString(z)
    raise PreconditionError(f"unknown string operation {op!r}; expected one of {STRING_OPS}")


# =============================================================================
# Every-zero string groups
# =============================================================================


@dataclass(frozen=True)
class StringFamily:
    """
    Members f_r = base + r (mod M) tokenwise for r in [1, M].

    Usage:
        fam = StringFamily(parse("123"), 4)
        fam.member(2).tokens   # (3, 0, 1)
    """

    base: NumberString
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError("group modulus must be positive")

    def _check(self, r: int) -> None:
        if not 1 <= r <= self.modulus:
            raise PreconditionError(f"member index {r} outside [1, {self.modulus}]")

    def member(self, r: int) -> NumberString:
        self._check(r)
        return NumberString(tuple((t + r) % self.modulus for t in self.base.tokens))

    def index_of(self, s: NumberString) -> int:
        for r in range(1, self.modulus + 1):
            if self.member(r) == s:
                return r
        raise PreconditionError(f"{s} is not a member of the family")


def string_group_add(family: StringFamily, i: int, j: int, zero: int) -> int:
    """
    lambda = i + j - k (mod M), reported in [1, M], with the tokenwise identity
    a_{i,t} + b_{j,t} - c_{k,t} = d_{lambda,t} (mod M) checked.

    Usage:
        string_group_add(StringFamily(parse("123"), 4), 2, 3, 1)   # 4
    """
    for r in (i, j, zero):
        family._check(r)
    m = family.modulus
    lam = (i + j - zero) % m or m
    a, b, c, d = (family.member(r).tokens for r in (i, j, zero, lam))
    for t, (u, v, w, z) in enumerate(zip(a, b, c, d)):
        if (u + v - w) % m != z:
            raise PreconditionError(f"tokenwise identity fails at position {t}")
    return lam


# =============================================================================
# Parameterized number-based string partition
# =============================================================================


def _segments(text: str, parts: int) -> Iterator[tuple[int, ...]]:
    """Every cut of ``text`` into ``parts`` contiguous segments, in lexicographic cut order."""
    n = len(text)
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0, *cuts, n)
        pieces = [text[bounds[k] : bounds[k + 1]] for k in range(parts)]
        if any(len(p) > 1 and p[0] == "0" for p in pieces):
            continue
        yield tuple(int(p) for p in pieces)


def _assemble(tokens: tuple[int, ...], q: int, layout: str) -> TopcodeMatrix:
    if layout == "vo4":
        return TopcodeMatrix(tokens[0::3], tokens[1::3], tokens[2::3])
    order = vo_cells(q, layout)
    rows = [[0] * q for _ in range(3)]
    for value, (r, j) in zip(tokens, order):
        rows[r][j] = value
    return TopcodeMatrix(tuple(rows[0]), tuple(rows[1]), tuple(rows[2]))


def _column_key(m: TopcodeMatrix) -> list[tuple[int, int, int]]:
    return sorted((min(a, b), c, max(a, b)) for a, c, b in m.columns)


def pnbspp_solve(
    s: NumberString,
    q: int,
    mode: str = "graphicable-any",
    target: Optional[TopcodeMatrix] = None,
    layout: str = "vo4",
) -> list[TopcodeMatrix]:
    """
    Cut a digit string into 3q numbers and assemble Topcode-matrices.

    ``layout`` decides how the 3q numbers fill the matrix: ``vo4`` reads
    consecutive (x_i, e_i, y_i) triples, any Vo name inverts that line-way.
    In ``graphicable-any`` mode every graphicable matrix is returned; in
    ``match-target`` mode only the matrices equal to ``target`` up to column
    and XY exchanges are returned, so an empty list means not found.

    Usage:
        pnbspp_solve(parse("011132"), 2)
        pnbspp_solve(vo_string(m, "vo1").as_digits(), m.q, "match-target", m, layout="vo1")
    """
    if not 1 <= q <= PNBSPP_MAX_Q:
        raise SizeLimitError(f"q = {q} is outside [1, {PNBSPP_MAX_Q}]")
    if not s.is_digit_form:
        raise PreconditionError("partition works on the digit form of a string")
    if mode not in ("graphicable-any", "match-target"):
        raise PreconditionError(f"unknown mode {mode!r}; expected graphicable-any or match-target")
    if mode == "match-target" and target is None:
        raise PreconditionError("match-target mode needs a target matrix")
    if layout != "vo4":
        _split_algo(layout, tuple(_VO))
    text = s.render(digits=True)
    parts = 3 * q
    if len(text) < parts:
        return []
    cuts = comb(len(text) - 1, parts - 1)
    if cuts > PNBSPP_MAX_CUTS:
        raise SizeLimitError(f"{cuts} ways to cut a {len(text)}-digit string into {parts} parts exceeds {PNBSPP_MAX_CUTS}")

    want = _column_key(target) if target is not None else None
    found = []
    for tokens in _segments(text, parts):
        m = _assemble(tokens, q, layout)
        if mode == "match-target":
            if _column_key(m) == want:
                found.append(m)
        elif is_graphicable(m):
            found.append(m)
    log.debug("pnbspp over %d cuts of %r: %d matrices", cuts, text, len(found))
    return found
