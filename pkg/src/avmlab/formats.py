"""Text encodings: graph6, the plain edge-list format, and DOT export.

graph6 follows the published format: a size prefix ``N(n)`` followed by
the upper triangle of the adjacency matrix read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte and offset
by 63.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import FormatError, GraphError
from .graph import Graph

G6_HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = [0] * (n * (n - 1) // 2)
    for u, v in g.edges:
        bits[v * (v - 1) // 2 + u] = 1
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _size_prefix(n) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError("graph6 characters must lie in the range '?'..'~'")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


_PAIR = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based, ``u < v``).

    Blank lines and lines starting with ``#`` are skipped.  Errors carry the
    1-based line number of the offending line.
    """
    rows = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge-list input", line=1)
    lineno, header = rows[0]
    match = _PAIR.match(header)
    if not match:
        raise FormatError(f"expected header 'n m', got {header.strip()!r}", line=lineno)
    n, m = int(match[1]), int(match[2])
    if n < 0 or m < 0:
        raise FormatError("vertex and edge counts must be non-negative", line=lineno)
    if len(rows) - 1 != m:
        bad = rows[m + 1][0] if len(rows) - 1 > m else rows[-1][0]
        raise FormatError(f"header declares {m} edges but {len(rows) - 1} edge lines follow", line=bad)
    seen = set()
    edges = []
    for lineno, row in rows[1:]:
        match = _PAIR.match(row)
        if not match:
            raise FormatError(f"expected 'u v', got {row.strip()!r}", line=lineno)
        u, v = int(match[1]), int(match[2])
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=lineno)
        if u > v:
            raise FormatError(f"edge endpoints must satisfy u < v, got {u} {v}", line=lineno)
        if u < 0 or v >= n:
            raise FormatError(f"vertex out of range 0..{n - 1}", line=lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", line=lineno)
        seen.add((u, v))
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def looks_like_edgelist(text: str) -> bool:
    for ln in text.splitlines():
        if ln.strip() and not ln.lstrip().startswith("#"):
            return bool(_PAIR.match(ln))
    return False


def read_graphs(text: str, fmt: str | None = None) -> list[Graph]:
    """Read one edge-list graph or any number of graph6 lines.

    ``fmt`` is ``"g6"``, ``"edgelist"`` or ``None`` to sniff the input.
    """
    if fmt is None:
        fmt = "edgelist" if looks_like_edgelist(text) else "g6"
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    if fmt != "g6":
        raise ValueError(f"unknown input format {fmt!r}")
    graphs = []
    for lineno, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip():
            continue
        try:
            graphs.append(from_graph6(ln))
        except FormatError as exc:
            raise FormatError(str(exc), line=lineno) from exc
    if not graphs:
        raise FormatError("no graph6 lines in input", line=1)
    return graphs


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for ln in lines:
        if ln.strip():
            yield from_graph6(ln)


def to_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"
