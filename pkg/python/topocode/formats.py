"""File formats.

This module provides:
- graph text ("p q" then one "u v" line per edge) and graph JSON
- labeling JSON {"kind", "params", "vertex", "edges": [[u, v, color], ...]}
- matrix text (three whitespace-separated rows) and matrix JSON
- comma-separated integer sequences
- length-prefixed msgpack frames: a 4-byte little-endian length followed by
  one msgpack map per frame
- DOT export of a graph, with colors when a labeling is given

Readers sniff the content: text that starts with ``{`` is JSON.
"""

import io
import json
import logging
import struct
from pathlib import Path
from typing import Any, BinaryIO, Iterable, Iterator, Optional, Union

import msgpack

from .errors import FormatError
from .graph import Graph, canonical_edge
from .labelings import Labeling
from .topcode import TopcodeMatrix

log = logging.getLogger(__name__)

PathLike = Union[str, Path]
FRAME_HEADER = struct.Struct("<I")


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror or e}") from e


def _loads(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}: invalid JSON ({e.msg} at line {e.lineno})") from e


def _ints(tokens: Iterable[str], source: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as e:
        raise FormatError(f"{source}: {e}") from e


# =============================================================================
# Graphs
# =============================================================================


def graph_to_dict(g: Graph) -> dict:
    return {"p": g.p, "edges": [list(e) for e in g.edges]}


def graph_from_dict(data: Any, source: str = "graph") -> Graph:
    if not isinstance(data, dict) or "p" not in data or "edges" not in data:
        raise FormatError(f'{source}: expected {{"p": int, "edges": [[u, v], ...]}}')
    try:
        p = int(data["p"])
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
    except (TypeError, ValueError) as e:
        raise FormatError(f"{source}: malformed edge list") from e
    return Graph(p, edges)


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str = "graph") -> Graph:
    """
    Usage:
        parse_graph("3 2\\n0 1\\n1 2\\n")   # P_3
        parse_graph('{"p": 2, "edges": [[0, 1]]}')
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_dict(_loads(stripped, source), source)
    lines = [ln.split() for ln in stripped.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise FormatError(f'{source}: first line must be "p q"')
    p, q = _ints(lines[0], source)
    body = lines[1:]
    if len(body) != q:
        raise FormatError(f"{source}: header announces {q} edges, found {len(body)}")
    edges = []
    for i, parts in enumerate(body, start=2):
        if len(parts) != 2:
            raise FormatError(f'{source}: line {i} must be "u v"')
        edges.append(tuple(_ints(parts, source)))
    return Graph(p, tuple(edges))


def read_graph(path: PathLike) -> Graph:
    return parse_graph(_read_text(path), str(path))


# =============================================================================
# Labelings
# =============================================================================


def labeling_to_dict(g: Graph, lab: Labeling) -> dict:
    data: dict[str, Any] = {"kind": lab.kind, "params": dict(lab.params), "vertex": list(lab.vertex)}
    if lab.edge is not None:
        data["edges"] = [[u, v, c] for (u, v), c in zip(g.edges, lab.edge)]
    return data


def labeling_from_dict(data: Any, g: Graph, source: str = "labeling") -> Labeling:
    if not isinstance(data, dict) or "vertex" not in data:
        raise FormatError(f'{source}: expected an object with a "vertex" list')
    edge = None
    if data.get("edges") is not None:
        colors: dict = {}
        for item in data["edges"]:
            if len(item) != 3:
                raise FormatError(f"{source}: edge entries are [u, v, color], got {item!r}")
            u, v, c = item
            e = canonical_edge(int(u), int(v))
            if e not in g.edge_index:
                raise FormatError(f"{source}: ({u}, {v}) is not an edge of the graph")
            colors[e] = None if c is None else int(c)
        edge = tuple(colors.get(e) for e in g.edges)
    return Labeling(tuple(data["vertex"]), edge, kind=str(data.get("kind", "")), params=dict(data.get("params") or {}))


def read_labeling(path: PathLike, g: Graph) -> Labeling:
    return labeling_from_dict(_loads(_read_text(path), str(path)), g, str(path))


# =============================================================================
# Matrices and sequences
# =============================================================================


def matrix_to_text(m: TopcodeMatrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m.rows()) + "\n"


def parse_matrix(text: str, source: str = "matrix") -> TopcodeMatrix:
    stripped = text.strip()
    if stripped.startswith("{"):
        data = _loads(stripped, source)
        if not isinstance(data, dict) or not {"x", "e", "y"} <= data.keys():
            raise FormatError(f'{source}: expected {{"x": [...], "e": [...], "y": [...]}}')
        return TopcodeMatrix.from_dict(data)
    rows = [_ints(ln.split(), source) for ln in stripped.splitlines() if ln.strip()]
    return TopcodeMatrix.from_rows(rows)


def read_matrix(path: PathLike) -> TopcodeMatrix:
    return parse_matrix(_read_text(path), str(path))


def read_rows(path: PathLike) -> list[list[int]]:
    """A general integer matrix, one whitespace-separated row per line."""
    source = str(path)
    return [_ints(ln.split(), source) for ln in _read_text(path).splitlines() if ln.strip()]


def parse_sequence(text: str) -> tuple[int, ...]:
    """'3,2,2,1' -> (3, 2, 2, 1); an empty string is the empty sequence."""
    parts = [t for t in text.replace(" ", "").split(",") if t]
    return tuple(_ints(parts, "sequence"))


# =============================================================================
# msgpack frames
# =============================================================================


def pack_frame(record: dict) -> bytes:
    data = msgpack.packb(record, use_bin_type=True)
    return FRAME_HEADER.pack(len(data)) + data


def iter_frames(fh: BinaryIO) -> Iterator[dict]:
    """Yield each length-prefixed msgpack map until end of stream."""
    while True:
        header = fh.read(FRAME_HEADER.size)
        if not header:
            return
        if len(header) < FRAME_HEADER.size:
            raise FormatError("truncated frame header")
        (length,) = FRAME_HEADER.unpack(header)
        data = fh.read(length)
        if len(data) < length:
            raise FormatError(f"truncated frame: expected {length} bytes, got {len(data)}")
        try:
            record = msgpack.unpackb(data, raw=False, strict_map_key=False)
        except ValueError as e:
            raise FormatError(f"bad msgpack frame: {e}") from e
        if not isinstance(record, dict):
            raise FormatError("frame does not hold a map")
        yield record


def write_frames(path: PathLike, records: Iterable[dict]) -> None:
    with open(path, "wb") as fh:
        for record in records:
            fh.write(pack_frame(record))


def read_records(path: PathLike) -> list[dict]:
    """JSON (one object or a list of objects) or a stream of msgpack frames."""
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror or e}") from e
    if raw.lstrip()[:1] in (b"{", b"["):
        # a frame header's low byte can be '{' or '['
        try:
            data = json.loads(raw.decode())
        except (UnicodeDecodeError, json.JSONDecodeError):
            log.debug("%s: not JSON, reading msgpack frames", path)
        else:
            return data if isinstance(data, list) else [data]
    return list(iter_frames(io.BytesIO(raw)))


# =============================================================================
# DOT
# =============================================================================


def to_dot(g: Graph, lab: Optional[Labeling] = None, name: str = "G") -> str:
    """
    Usage:
        print(to_dot(path(3), Labeling((0, 2, 1), (2, 1))))
    """
    out = [f"graph {name} {{"]
    for v in g.vertices:
        label = g.names[v] if g.names else str(v)
        if lab is not None and lab.vertex[v] is not None:
            out.append(f'  {v} [label="{label}", color_value={lab.vertex[v]}, xlabel="{lab.vertex[v]}"];')
        else:
            out.append(f'  {v} [label="{label}"];')
    edge_colors = lab.edge if lab is not None else None
    for i, (u, v) in enumerate(g.edges):
        if edge_colors is not None and edge_colors[i] is not None:
            out.append(f'  {u} -- {v} [label="{edge_colors[i]}", color_value={edge_colors[i]}];')
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
