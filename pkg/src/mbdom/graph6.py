"""graph6 reader and writer (as produced by nauty's geng and friends)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, from_edges

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))


def encode(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _size_field(G.n) + "".join(body)


def decode(text: str) -> Graph:
    line = text.strip()
    start = 0
    if line.startswith(HEADER):
        start = len(HEADER)
    if start >= len(line):
        raise Graph6Error("empty graph6 string", start)
    for i in range(start, len(line)):
        if not 63 <= ord(line[i]) <= 126:
            raise Graph6Error(f"character {line[i]!r} out of range", i)

    pos = start
    if line[pos] != "~":
        n = ord(line[pos]) - 63
        pos += 1
    else:
        if line[pos + 1:pos + 2] == "~":
            raise Graph6Error("order above 258047 not supported", pos)
        if len(line) < pos + 4:
            raise Graph6Error("truncated size header", pos)
        n = 0
        for ch in line[pos + 1:pos + 4]:
            n = n << 6 | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error("non-canonical size header", pos)
        pos += 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", start)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for n={n}, got {len(body)}", pos)

    adj = [0] * n
    k = 0
    j, i = 1, 0
    for offset, ch in enumerate(body):
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", pos + offset)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(adj))


def read_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each data line; blank and
    ``>>`` header-only lines are skipped."""
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>") and (not line.startswith(HEADER) or line == HEADER):
            continue
        try:
            yield number, decode(line)
        except Graph6Error as err:
            yield number, err


def edge_list_text(G: Graph) -> str:
    lines = [str(G.n)]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [r.split() for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty edge list")
    try:
        n = int(rows[0][0])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as err:
        raise ValueError(f"malformed edge list: {err}") from None
    return from_edges(n, edges)

