"""Graph isomorphism by colour refinement with individualisation.

Meant for the small, near-complete graphs produced by the clique-join
families (n up to about 40). Both graphs are refined together on their
disjoint union so that colours are directly comparable.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .graph import Graph, disjoint_union, members


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def _balanced(colors: list[int], n: int) -> bool:
    return Counter(colors[:n]) == Counter(colors[n:])


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """A list ``phi`` with ``g1.has_edge(u, v) == g2.has_edge(phi[u], phi[v])``, or None."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    u = disjoint_union(g1, g2)
    nbrs = [members(r) for r in u.rows]
    colors = _refine(nbrs, u.degrees())
    if not _balanced(colors, n):
        return None

    def search(colors):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        open_cells = [c for c in cells.values() if len(c) > 2]
        if not open_cells:
            phi = [0] * n
            for c in cells.values():
                a, b = sorted(c)
                phi[a] = b - n
            ok = all(
                g1.has_edge(a, b) == g2.has_edge(phi[a], phi[b])
                for a in range(n)
                for b in range(a + 1, n)
            )
            return phi if ok else None
        cell = min(open_cells, key=len)
        v = cell[0]
        fresh = max(colors) + 1
        for w in cell:
            if w < n:
                continue
            trial = list(colors)
            trial[v] = trial[w] = fresh
            trial = _refine(nbrs, trial)
            if _balanced(trial, n):
                phi = search(trial)
                if phi is not None:
                    return phi
        return None

    return search(colors)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
