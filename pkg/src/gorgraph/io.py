"""Reading graphs from edge-list text and graph6 strings."""

from __future__ import annotations

import os
import re

from .graph import Graph


class GraphFormatError(ValueError):
    pass


_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse one edge per line (two 0-based labels).

    Blank lines and ``#`` comments are skipped. The vertex count is one more
    than the largest label unless a ``n=<k>`` line fixes it.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate n= header")
            n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer label in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative label")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at {u}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise GraphFormatError(f"label {top - 1} exceeds header n={n}")
    return Graph.from_edges(n, edges)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        chunk, rest = data[2:8], data[8:]
    else:
        chunk, rest = data[1:4], data[4:]
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, rest


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 record (optional ``>>graph6<<`` header)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if any(c < 63 or c > 126 for c in data):
        raise GraphFormatError("graph6 characters must lie in range 63..126")
    n, body = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [sum(b << (5 - k) for k, b in enumerate(bits[p:p + 6])) + 63 for p in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")
