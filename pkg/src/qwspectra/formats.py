"""Graph file formats: a plain edge list and McKay's graph6."""

from __future__ import annotations

from pathlib import Path

from .errors import (EdgeCountMismatch, InvalidHeader, MalformedLine, ParseError,
                     Truncated, VertexOutOfRange)
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"`` (0-based ids).

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise MalformedLine("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedLine(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedLine(f"header must be two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedLine("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise EdgeCountMismatch(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, line in enumerate(body, start=2):
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer vertex in {line!r}") from None
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"line {lineno}: vertex {x} not in 0..{n - 1}")
        edges.append((u, v))
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode the vertex-count prefix; returns (n, bytes consumed)."""
    if not data:
        raise Truncated("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise InvalidHeader(f"byte {b} outside the graph6 range 63..126")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 2:
        raise Truncated("graph6 size prefix cut short")
    if data[1] != 126:
        if len(data) < 4:
            raise Truncated("graph6 size prefix cut short")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise Truncated("graph6 size prefix cut short")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record; edges come out sorted lexicographically (u < v)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if data.startswith(b":") or data.startswith(b";") or data.startswith(b"&"):
        raise InvalidHeader("sparse6/digraph6 records are not supported")
    n, offset = _g6_size(data)
    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    body = data[offset:]
    if len(body) < n_bytes:
        raise Truncated(f"graph6 body has {len(body)} bytes, needs {n_bytes}")
    if len(body) > n_bytes:
        raise ParseError(f"graph6 body has {len(body) - n_bytes} trailing bytes")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    idx = 0
    # column-major upper triangle: for v in 1..n-1, u in 0..v-1
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    edges.sort()
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> bytes:
    """Encode a simple graph in graph6 (no header)."""
    if not g.is_simple:
        raise ValueError("graph6 encodes simple graphs only")
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        out = bytearray([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    adj = {(min(u, v), max(u, v)) for u, v in g.edges}
    bits = [1 if (u, v) in adj else 0 for v in range(1, n) for u in range(v)]
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def read_graph_file(path: str | Path, fmt: str | None = None) -> list[Graph]:
    """Read one file.  Format is taken from ``fmt`` or the extension
    (``.g6``/``.graph6`` for graph6, anything else is an edge list)."""
    path = Path(path)
    if fmt is None:
        fmt = "graph6" if path.suffix.lower() in (".g6", ".graph6") else "edge-list"
    if fmt == "graph6":
        return read_graph6_lines(path.read_bytes().decode("ascii"))
    if fmt == "edge-list":
        return [parse_edge_list(path.read_text())]
    raise ValueError(f"unknown graph format {fmt!r}")
