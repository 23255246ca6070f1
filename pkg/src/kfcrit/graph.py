"""Simple undirected graphs stored as bitset rows.

Row ``v`` of a :class:`Graph` is a Python ``int`` whose bit ``u`` is set
exactly when ``uv`` is an edge. Graph values are immutable; every
operation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import numpy as np

VertexSet = frozenset  # frozenset[int]; members index vertices 0..n-1


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex indices."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    # -- basic queries -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.rows[u] >> (u + 1) << (u + 1))]

    def missing_edges(self) -> list[tuple[int, int]]:
        """Non-adjacent pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        full = self.full_mask
        out = []
        for u in range(self.n):
            absent = full & ~self.rows[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in members(absent))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"cannot add edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in members(self.rows[v]))
        return Graph(self.n, tuple(rows))

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        nbytes = max(1, (self.n + 7) // 8)
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self.rows)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
        return bits.reshape(self.n, nbytes * 8)[:, : self.n].astype(dtype)

    def word_rows(self) -> np.ndarray:
        """Rows as ``uint64`` words; only valid for ``n <= 64``."""
        if self.n > 64:
            raise GraphError(f"bitset kernels need n <= 64, got n={self.n}")
        return np.array(self.rows, dtype=np.uint64)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- constructors ------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("n must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(r << off for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = tuple(r | right for r in g1.rows) + tuple((r << g1.n) | left for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


# -- induced subgraphs and components ---------------------------------


def _check_subset(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        m |= 1 << v
    return m


def delete_vertices_with_map(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``V(g) - s`` and the old index of each new vertex."""
    removed = _check_subset(g, s)
    keep = [v for v in range(g.n) if not removed >> v & 1]
    new_index = {v: i for i, v in enumerate(keep)}
    rows = tuple(mask_of(new_index[u] for u in members(g.rows[v] & ~removed)) for v in keep)
    return Graph(len(keep), rows), keep


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    return delete_vertices_with_map(g, s)[0]


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    keep = _check_subset(g, s)
    return delete_vertices(g, members(g.full_mask & ~keep))


def component_masks(g: Graph, alive: Optional[int] = None) -> list[int]:
    """Connected components of ``g[alive]`` as bitmasks, sorted by least vertex."""
    rem = g.full_mask if alive is None else alive
    rows = g.rows
    out = []
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & rem & ~comp
            comp |= frontier
        out.append(comp)
        rem &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    return [frozenset(members(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def odd_component_count(g: Graph) -> int:
    return sum(1 for c in component_masks(g) if c.bit_count() % 2)


def isolated_count(g: Graph) -> int:
    return sum(1 for r in g.rows if r == 0)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def is_spanning_subgraph(g: Graph, h: Graph) -> bool:
    """True when every edge of ``g`` is an edge of ``h`` (same vertex set)."""
    return g.n == h.n and all(r & ~q == 0 for r, q in zip(g.rows, h.rows))
