"""Pure-Python kernels; the fallback when the compiled ``_core`` is absent.

Every function here has a twin of the same name and signature in
``_core.pyx``. Graph arguments are bitset rows (any sequence of ints,
bit ``u`` of ``rows[v]`` set iff ``uv`` is an edge) plus ``n``; ``alive``
masks restrict a kernel to an induced subgraph.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- general matching (Edmonds' blossom algorithm) ----------------------


def matching_mate(rows, n, alive):
    """Maximum-cardinality matching of ``G[alive]`` as a mate array."""
    rows = [int(r) for r in rows]
    alive = int(alive)
    mate = [-1] * n
    # greedy start
    for v in _bits(alive):
        if mate[v] == -1:
            for u in _bits(rows[v] & alive):
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in _bits(alive):
        if mate[root] != -1:
            continue
        end, parent = _find_path(rows, n, alive, mate, root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return mate


def _find_path(rows, n, alive, mate, root):
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    head = 0

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while head < len(queue):
        v = queue[head]
        head += 1
        for to in _bits(rows[v] & alive):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in _bits(alive):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def matching_size(rows, n, alive):
    return sum(1 for m in matching_mate(rows, n, alive) if m != -1) // 2


# -- bipartite double cover (Hopcroft-Karp on the implicit cover) -------


def cover_mate(rows, n, alive):
    """Maximum matching of the double cover of ``G[alive]``.

    Left copy ``v0`` is joined to right copy ``u1`` iff ``uv`` is an edge.
    Returns ``mate_left`` with ``mate_left[v] = u`` meaning ``v0-u1`` is used.
    """
    rows = [int(r) for r in rows]
    alive = int(alive)
    left = list(_bits(alive))
    nbrs = {v: list(_bits(rows[v] & alive)) for v in left}
    mate_l = [-1] * n
    mate_r = [-1] * n
    inf = n + 1

    while True:
        dist = {}
        queue = [v for v in left if mate_l[v] == -1]
        for v in queue:
            dist[v] = 0
        found = False
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in nbrs[v]:
                w = mate_r[u]
                if w == -1:
                    found = True
                elif w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if not found:
            return mate_l

        def dfs(v):
            for u in nbrs[v]:
                w = mate_r[u]
                if w == -1 or (dist.get(w, inf) == dist[v] + 1 and dfs(w)):
                    mate_l[v], mate_r[u] = u, v
                    return True
            dist[v] = inf
            return False

        for v in left:
            if mate_l[v] == -1:
                dfs(v)


def cover_size(rows, n, alive):
    return sum(1 for m in cover_mate(rows, n, alive) if m != -1)


# -- subset scans --------------------------------------------------------


def deletion_scan(rows, n, k, fractional):
    """First ``k``-subset (lexicographic) whose deletion leaves no (fractional) PM.

    Returns its bitmask, or -1 if every deletion leaves one.
    """
    full = (1 << n) - 1
    need = n - k
    for combo in combinations(range(n), k):
        s = 0
        for v in combo:
            s |= 1 << v
        alive = full & ~s
        if fractional:
            ok = cover_size(rows, n, alive) == need
        else:
            ok = need % 2 == 0 and 2 * matching_size(rows, n, alive) == need
        if not ok:
            return s
    return -1


def _odd_and_isolated(rows, rem):
    odd = iso = 0
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= rows[v]
            frontier = reach & rem & ~comp
            comp |= frontier
        size = comp.bit_count()
        odd += size & 1
        iso += size == 1
        rem &= ~comp
    return odd, iso


def tutte_scan(rows, n, k, isolated):
    """First ``S`` with ``|S| >= k`` violating ``o(G-S) <= |S|-k``.

    With ``isolated`` set the counted quantity is ``i(G-S)`` instead.
    Sets are scanned by size, then lexicographically. Returns -1 if none.
    """
    rows = [int(r) for r in rows]
    full = (1 << n) - 1
    for size in range(k, n + 1):
        for combo in combinations(range(n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            odd, iso = _odd_and_isolated(rows, full & ~s)
            if (iso if isolated else odd) > size - k:
                return s
    return -1


# -- dense eigen-solvers -------------------------------------------------


def power_iteration(a, tol, maxiter):
    """Shifted power iteration ``(A + I)x`` from the all-ones vector.

    Returns ``(rho, residual, iterations, x)`` where ``residual`` is
    ``||Ax - rho x||_inf`` for ``||x||_inf = 1``; ``iterations`` is negative
    when the cap was hit.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    n = a.shape[0]
    x = np.ones(n)
    rho = 0.0
    res = math.inf
    for it in range(1, maxiter + 1):
        y = a @ x
        rho = float(x @ y) / float(x @ x)
        res = float(np.max(np.abs(y - rho * x))) if n else 0.0
        if res <= tol:
            return rho, res, it, x
        z = y + x
        x = z / np.max(np.abs(z))
    return rho, res, -maxiter, x


def jacobi_eigenvalues(a, tol, max_sweeps):
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    scale = math.sqrt(float(np.sum(a * a))) or 1.0
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = colp[p] - t * apq
                a[q, q] = colq[q] + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi sweeps did not converge")
    return np.sort(np.diag(a))
