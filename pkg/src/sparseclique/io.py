"""Readers and writers for the supported graph file formats.

Three ASCII formats are supported:

- DIMACS clique format: ``c`` comment lines, one ``p edge <n> <m>`` header,
  ``e <u> <v>`` edge lines with 1-based vertex ids.
- Whitespace-separated edge lists with ``#`` comments (SNAP style). The
  vertex count is taken from an optional ``# n <count>`` (or SNAP's
  ``# Nodes: <count> ...``) comment and otherwise inferred as 1 + max id.
- Matrix Market coordinate files: pattern/real/integer fields with
  general/symmetric/skew-symmetric symmetry. Values are ignored and
  diagonal entries dropped; complex and array banners are rejected.

All parsers produce a raw `EdgeList` with 0-based ids; `load_graph` chains
them with `normalize`. Writers round-trip losslessly against the Graph
invariants for every writer/reader pair.
"""

from __future__ import annotations

import io as _io
import re
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import FormatError, UnsupportedFormatError
from .graph import EdgeList, Graph, normalize

FORMATS = ("dimacs", "edgelist", "mtx")

_SNAP_NODES_RE = re.compile(r"#\s*(?:n|Nodes:)\s+(\d+)")


def _lines(text: str | IO[str] | Iterable[str]) -> Iterator[tuple[int, str]]:
    if isinstance(text, str):
        src: Iterable[str] = _io.StringIO(text)
    else:
        src = text
    for lineno, line in enumerate(src, start=1):
        yield lineno, line.rstrip("\n")


def parse_dimacs(text: str | IO[str]) -> EdgeList:
    """Parse DIMACS ASCII clique format into a raw edge list (ids made 0-based)."""
    n = None
    pairs: list[tuple[int, int]] = []
    for lineno, line in _lines(text):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        fields = stripped.split()
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise FormatError("duplicate 'p' header line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(f"malformed header {stripped!r}, expected 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise FormatError(f"non-numeric header fields in {stripped!r}", lineno) from None
            if n < 0:
                raise FormatError(f"negative vertex count {n}", lineno)
        elif kind == "e":
            if n is None:
                raise FormatError("edge line before 'p edge' header", lineno)
            if len(fields) != 3:
                raise FormatError(f"malformed edge line {stripped!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"non-numeric vertex id in {stripped!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex id out of range 1..{n} in {stripped!r}", lineno)
            pairs.append((u - 1, v - 1))
        else:
            raise FormatError(f"unrecognized line type {kind!r}", lineno)
    if n is None:
        raise FormatError("missing 'p edge' header line")
    return EdgeList.from_pairs(n, pairs)


def parse_edge_list(text: str | IO[str], base: int = 0) -> EdgeList:
    """Parse a whitespace-separated pair list with ``#`` comments.

    `base` selects 0- or 1-based ids in the file. The vertex count comes
    from a ``# n <count>`` / ``# Nodes: <count>`` comment when present and
    is inferred as 1 + max id otherwise.
    """
    if base not in (0, 1):
        raise ValueError(f"base must be 0 or 1, got {base}")
    declared_n = None
    pairs: list[tuple[int, int]] = []
    for lineno, line in _lines(text):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            match = _SNAP_NODES_RE.match(stripped)
            if match and declared_n is None:
                declared_n = int(match.group(1))
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise FormatError(f"expected two vertex ids, got {stripped!r}", lineno)
        try:
            u, v = int(fields[0]) - base, int(fields[1]) - base
        except ValueError:
            raise FormatError(f"non-numeric vertex id in {stripped!r}", lineno) from None
        if u < 0 or v < 0:
            raise FormatError(f"vertex id below base {base} in {stripped!r}", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise FormatError(f"vertex id exceeds declared count {declared_n}", lineno)
        pairs.append((u, v))
    if declared_n is None:
        declared_n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    return EdgeList.from_pairs(declared_n, pairs)


def parse_matrix_market(text: str | IO[str]) -> EdgeList:
    """Parse a Matrix Market coordinate file into an edge list of off-diagonal entries."""
    it = _lines(text)
    try:
        lineno, banner = next(it)
    except StopIteration:
        raise FormatError("empty stream, missing MatrixMarket banner") from None
    fields = banner.strip().split()
    if len(fields) < 3 or fields[0].lower() != "%%matrixmarket":
        raise FormatError("missing '%%MatrixMarket' banner", lineno)
    parts = [f.lower() for f in fields[1:]]
    obj, fmt = parts[0], parts[1]
    mm_field = parts[2] if len(parts) > 2 else "real"
    symmetry = parts[3] if len(parts) > 3 else "general"
    if obj != "matrix" or fmt != "coordinate":
        raise UnsupportedFormatError(f"unsupported MatrixMarket banner '{obj} {fmt}'", lineno)
    if mm_field not in ("pattern", "real", "integer"):
        raise UnsupportedFormatError(f"unsupported MatrixMarket field {mm_field!r}", lineno)
    if symmetry not in ("general", "symmetric", "skew-symmetric"):
        raise UnsupportedFormatError(f"unsupported MatrixMarket symmetry {symmetry!r}", lineno)

    size_seen = False
    rows = cols = nnz = 0
    pairs: list[tuple[int, int]] = []
    for lineno, line in it:
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        fields = stripped.split()
        if not size_seen:
            if len(fields) != 3:
                raise FormatError(f"malformed size line {stripped!r}", lineno)
            try:
                rows, cols, nnz = (int(f) for f in fields)
            except ValueError:
                raise FormatError(f"non-numeric size line {stripped!r}", lineno) from None
            if rows != cols:
                raise FormatError(f"adjacency matrix must be square, got {rows}x{cols}", lineno)
            size_seen = True
            continue
        if len(fields) < 2:
            raise FormatError(f"malformed coordinate entry {stripped!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"non-numeric coordinate in {stripped!r}", lineno) from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise FormatError(f"coordinate out of range 1..{rows} in {stripped!r}", lineno)
        if i != j:
            pairs.append((i - 1, j - 1))
    if not size_seen:
        raise FormatError("missing size line")
    return EdgeList.from_pairs(rows, pairs)


def detect_format(path: str | Path) -> str:
    """Guess a format token from the file suffix (edge list when unrecognized)."""
    suffix = Path(path).suffix.lower()
    if suffix in (".clq", ".dimacs", ".col"):
        return "dimacs"
    if suffix in (".mtx", ".mm"):
        return "mtx"
    return "edgelist"


def parse(text: str | IO[str], fmt: str, base: int = 0) -> EdgeList:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text, base=base)
    if fmt == "mtx":
        return parse_matrix_market(text)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def load_graph(path: str | Path, fmt: str = "auto", base: int = 0) -> Graph:
    """Read, parse, and normalize a graph file."""
    if fmt == "auto":
        fmt = detect_format(path)
    with open(path, "r", encoding="utf-8", errors="replace") as handle:
        return normalize(parse(handle, fmt, base=base))


def write_dimacs(g: Graph, out: IO[str]) -> None:
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edge_pairs():
        out.write(f"e {u + 1} {v + 1}\n")


def write_edge_list(g: Graph, out: IO[str]) -> None:
    # The "# n" comment preserves trailing isolated vertices across round trips.
    out.write(f"# n {g.n}\n")
    for u, v in g.edge_pairs():
        out.write(f"{u} {v}\n")


def write_matrix_market(g: Graph, out: IO[str]) -> None:
    out.write("%%MatrixMarket matrix coordinate pattern symmetric\n")
    out.write(f"{g.n} {g.n} {g.m}\n")
    for u, v in g.edge_pairs():
        out.write(f"{v + 1} {u + 1}\n")


def write(g: Graph, out: IO[str], fmt: str) -> None:
    if fmt == "dimacs":
        write_dimacs(g, out)
    elif fmt == "edgelist":
        write_edge_list(g, out)
    elif fmt == "mtx":
        write_matrix_market(g, out)
    else:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def save_graph(g: Graph, path: str | Path, fmt: str = "auto") -> None:
    if fmt == "auto":
        fmt = detect_format(path)
    with open(path, "w", encoding="utf-8") as handle:
        write(g, handle, fmt)
