"""graph6 and plain edge-list formats.

graph6 packs the upper triangle column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...) six bits per byte, each byte offset by 63, after a size header.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph, graph_from_edge_list

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise ValueError(f"not a graph6 string: {text!r}")
    data = [ord(c) - 63 for c in s]
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size header")
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        if len(data) < 8:
            raise ValueError("truncated graph6 size header")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise ValueError(f"graph6 body has {len(data) - pos} bytes, expected {need}")
    bits = []
    for d in data[pos:]:
        bits.extend((d >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_pairs0(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edge_list()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse ``n m`` followed by m lines ``i j`` (1-based); blank and # lines skipped."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    rows = [ln.split() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    pairs = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"bad edge line: {' '.join(r)!r}")
        pairs.append((int(r[0]), int(r[1])))
    if len(pairs) != m:
        raise ValueError(f"header promises {m} edges, found {len(pairs)}")
    return graph_from_edge_list(n, pairs)


def read_graph6_stream(stream: TextIO) -> Iterable[Graph]:
    for line in stream:
        if line.strip():
            yield from_graph6(line)
