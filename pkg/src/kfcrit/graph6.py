"""graph6 (short, header-less form) and plain edge-list text I/O."""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_SHORT_N = 62


class Graph6Error(GraphError):
    pass


def encode(g: Graph) -> str:
    if g.n > MAX_SHORT_N:
        raise Graph6Error(f"graph6 short form holds at most {MAX_SHORT_N} vertices, got {g.n}")
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    ]
    return chr(63 + g.n) + "".join(body)


def decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error("graph6 characters must lie in '?'..'~'")
    n = codes[0]
    if n == 63:
        raise Graph6Error(f"long-form graph6 (n > {MAX_SHORT_N}) is not supported")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = codes[1:]
    if len(body) != expected:
        raise Graph6Error(f"graph6 length mismatch: n={n} needs {expected} data bytes, got {len(body)}")
    bits = []
    for c in body:
        bits.extend(c >> (5 - i) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in graph6 string")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``"u v"`` lines; ``#`` starts a comment. ``n`` defaults to max index + 1."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: vertex labels must be integers") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())
