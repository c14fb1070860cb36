"""Text formats for graphs: edge lists, the inline ``"n: u-v ..."`` form, and graph6.

All user-facing vertex labels are 1-indexed.
"""

from __future__ import annotations

import re
from typing import Iterator

from .graph import MAX_VERTICES, Graph, GraphError, from_edges


class GraphFormatError(GraphError):
    """Malformed graph text; carries the 1-indexed line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# --- edge-list text -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = raw.index(stripped[0]) + 1
        fields = stripped.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFormatError("expected header 'n <count>'", lineno, col)
            n = _parse_int(fields[1], lineno, raw.index(fields[1], col - 1) + 1)
            if not 1 <= n <= MAX_VERTICES:
                raise GraphFormatError(f"vertex count must be in 1..{MAX_VERTICES}", lineno, col)
            continue
        if len(fields) != 2:
            raise GraphFormatError("expected 'u v'", lineno, col)
        pos = col - 1
        pair = []
        for field in fields:
            pos = raw.index(field, pos)
            pair.append(_parse_vertex(field, n, lineno, pos + 1))
            pos += len(field)
        if pair[0] == pair[1]:
            raise GraphFormatError(f"self-loop at vertex {pair[0] + 1}", lineno, col)
        edges.append((pair[0], pair[1]))
    if n is None:
        raise GraphFormatError("missing header 'n <count>'", 1, 1)
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _parse_int(field: str, line: int, column: int) -> int:
    if not field.isdigit():
        raise GraphFormatError(f"expected an integer, got {field!r}", line, column)
    return int(field)


def _parse_vertex(field: str, n: int, line: int, column: int) -> int:
    v = _parse_int(field, line, column)
    if not 1 <= v <= n:
        raise GraphFormatError(f"vertex {v} out of range 1..{n}", line, column)
    return v - 1


# --- inline form ------------------------------------------------------------------

_INLINE_HEAD = re.compile(r"\s*(\d+)\s*:")
_INLINE_EDGE = re.compile(r"(\d+)-(\d+)$")


def parse_inline(text: str) -> Graph:
    """Parse ``"3: 1-2 2-3"`` (vertex count, then 1-indexed edges)."""
    head = _INLINE_HEAD.match(text)
    if not head:
        raise GraphFormatError("expected '<n>: u-v u-v ...'", 1, 1)
    n = int(head.group(1))
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count must be in 1..{MAX_VERTICES}", 1, head.start(1) + 1)
    edges = []
    for tok in re.finditer(r"\S+", text[head.end() :]):
        col = head.end() + tok.start() + 1
        m = _INLINE_EDGE.match(tok.group())
        if not m:
            raise GraphFormatError(f"expected 'u-v', got {tok.group()!r}", 1, col)
        u = _parse_vertex(m.group(1), n, 1, col)
        v = _parse_vertex(m.group(2), n, 1, col + m.start(2))
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u + 1}", 1, col)
        edges.append((u, v))
    return from_edges(n, edges)


# --- graph6 -----------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column by column, 6 bits per char)."""
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(text: str, line: int = 1) -> Graph:
    s = text.strip("\r\n")
    offset = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
        offset = len(_G6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", line, offset + 1)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", line, offset + k + 1)
    if s[0] == "~":
        raise GraphFormatError("graphs with more than 62 vertices are not supported", line, offset + 1)
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}", line, offset + 1)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - 1 != nchars:
        raise GraphFormatError(
            f"expected {nchars} data characters for n={n}, got {len(s) - 1}", line, offset + 2
        )
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend(val >> (5 - t) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise GraphFormatError("non-zero padding bits", line, offset + len(s))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def iter_graph6(text: str) -> Iterator[Graph]:
    """Yield one graph per non-empty line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            yield from_graph6(raw.strip(), lineno)
