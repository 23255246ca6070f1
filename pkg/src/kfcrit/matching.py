"""Perfect and fractional perfect matchings with exact witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .graph import Graph, members

BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class Matching:
    edges: frozenset  # of (u, v) with u < v

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        seen = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True

    def is_perfect(self, g: Graph) -> bool:
        return self.is_valid(g) and 2 * self.size == g.n


@dataclass(frozen=True)
class FractionalMatching:
    """Half-integral edge weights in half-units: 1 means 1/2, 2 means 1."""

    halves: dict  # (u, v) with u < v -> 1 or 2

    def weight(self, u: int, v: int) -> float:
        return self.halves.get((min(u, v), max(u, v)), 0) / 2

    def is_perfect(self, g: Graph) -> bool:
        load = [0] * g.n
        for (u, v), h in self.halves.items():
            if h not in (1, 2) or not g.has_edge(u, v):
                return False
            load[u] += h
            load[v] += h
        return all(x == 2 for x in load)


def _mate_to_matching(mate) -> Matching:
    return Matching(frozenset((v, u) for v, u in enumerate(mate) if u > v))


def max_matching(g: Graph) -> Matching:
    kern, rows = _kernels.prepare(g)
    return _mate_to_matching(kern.matching_mate(rows, g.n, g.full_mask))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * max_matching(g).size == g.n


def bipartite_double_cover(g: Graph) -> Graph:
    """Vertices ``v`` (layer 0) and ``n + v`` (layer 1); ``uv`` lifts to ``u0-v1`` and ``v0-u1``."""
    n = g.n
    rows = tuple(r << n for r in g.rows) + tuple(g.rows)
    return Graph(2 * n, rows)


def fractional_perfect_matching(g: Graph) -> Optional[FractionalMatching]:
    """A half-integral fractional perfect matching, or None if none exists.

    Decided by a perfect matching of the bipartite double cover; edge ``uv``
    gets one half-unit for each of ``u0-v1`` and ``v0-u1`` in that matching.
    """
    kern, rows = _kernels.prepare(g)
    mate = kern.cover_mate(rows, g.n, g.full_mask)
    if any(u == -1 for u in mate):
        return None
    halves: dict = {}
    for v, u in enumerate(mate):
        key = (min(u, v), max(u, v))
        halves[key] = halves.get(key, 0) + 1
    return FractionalMatching(halves)


def has_fractional_perfect_matching(g: Graph) -> tuple[bool, Optional[FractionalMatching]]:
    fm = fractional_perfect_matching(g)
    return fm is not None, fm


def brute_force_matching_oracle(g: Graph) -> int:
    """Maximum matching size by exhaustive branching (small graphs only)."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute-force oracle limited to n <= {BRUTE_FORCE_MAX_N}")
    rows = g.rows

    def best(free: int) -> int:
        # branch on the lowest free vertex: leave it unmatched or match it to a free neighbour
        if free.bit_count() < 2:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        top = best(rest)
        for u in members(rows[v] & rest):
            if top == free.bit_count() // 2:
                break
            top = max(top, 1 + best(rest & ~(1 << u)))
        return top

    return best(g.full_mask)
