"""Vertex connectivity through Menger's theorem and unit-capacity max-flow."""

from __future__ import annotations

from collections import deque

from .graph import Graph, members

_INF = 1 << 30


def local_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint ``s``-``t`` paths.

    ``s`` and ``t`` must be distinct and non-adjacent. Each vertex ``v`` is
    split into ``2v`` (in) and ``2v+1`` (out) joined by a unit arc.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct non-adjacent vertices")
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}

    def arc(a, b, c):
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, _INF if v in (s, t) else 1)
        for u in members(g.rows[v]):
            arc(2 * v + 1, 2 * u, _INF)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {source: source}
        q = deque([source])
        while q and sink not in parent:
            a = q.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    q.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); complete graphs get n-1 by convention, the empty graph 0."""
    n = g.n
    if n <= 1:
        return 0
    full = g.full_mask
    best = n - 1
    # Some vertex among the first best+1 lies outside any minimum cut.
    i = 0
    while i <= best and i < n:
        for j in members(full & ~g.rows[i] & ~(1 << i)):
            best = min(best, local_connectivity(g, i, j, cutoff=best))
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n > k and vertex_connectivity(g) >= k
