# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same names and contracts as ``kfcrit._pure``.

Graphs are passed as ``uint64`` bitset rows, so these kernels handle
``n <= 64`` only.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, copysign
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

BACKEND = "cython"

cdef extern from * nogil:
    int ctz64 "__builtin_ctzll"(unsigned long long)
    int popcount64 "__builtin_popcountll"(unsigned long long)


cdef inline uint64_t bit(int v) noexcept nogil:
    return (<uint64_t>1) << v


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (bit(n)) - 1


# -- blossom -------------------------------------------------------------

cdef struct Blossom:
    int n
    const uint64_t* rows
    uint64_t alive
    int* mate
    int* parent
    int* base
    char* used
    char* flag
    int* queue


cdef int lca(Blossom* b, int x, int y) noexcept nogil:
    cdef int i
    for i in range(b.n):
        b.flag[i] = 0
    while True:
        x = b.base[x]
        b.flag[x] = 1
        if b.mate[x] == -1:
            break
        x = b.parent[b.mate[x]]
    while True:
        y = b.base[y]
        if b.flag[y]:
            return y
        y = b.parent[b.mate[y]]


cdef void mark_path(Blossom* b, int v, int base_v, int child) noexcept nogil:
    while b.base[v] != base_v:
        b.flag[b.base[v]] = 1
        b.flag[b.base[b.mate[v]]] = 1
        b.parent[v] = child
        child = b.mate[v]
        v = b.parent[b.mate[v]]


cdef int find_path(Blossom* b, int root) noexcept nogil:
    cdef int n = b.n, head = 0, tail = 0, v, to, cur, i
    cdef uint64_t m, rest
    for i in range(n):
        b.used[i] = 0
        b.parent[i] = -1
        b.base[i] = i
    b.used[root] = 1
    b.queue[tail] = root
    tail += 1
    while head < tail:
        v = b.queue[head]
        head += 1
        m = b.rows[v] & b.alive
        while m:
            to = ctz64(m)
            m &= m - 1
            if b.base[v] == b.base[to] or b.mate[v] == to:
                continue
            if to == root or (b.mate[to] != -1 and b.parent[b.mate[to]] != -1):
                cur = lca(b, v, to)
                for i in range(n):
                    b.flag[i] = 0
                mark_path(b, v, cur, to)
                mark_path(b, to, cur, v)
                rest = b.alive
                while rest:
                    i = ctz64(rest)
                    rest &= rest - 1
                    if b.flag[b.base[i]]:
                        b.base[i] = cur
                        if not b.used[i]:
                            b.used[i] = 1
                            b.queue[tail] = i
                            tail += 1
            elif b.parent[to] == -1:
                b.parent[to] = v
                if b.mate[to] == -1:
                    return to
                b.used[b.mate[to]] = 1
                b.queue[tail] = b.mate[to]
                tail += 1
    return -1


cdef int blossom_run(const uint64_t* rows, int n, uint64_t alive, int* mate, int* scratch) noexcept nogil:
    """Fill ``mate``; return the matching size. ``scratch`` needs 7n ints."""
    cdef Blossom b
    cdef int v, u, end, pv, nxt, size = 0
    cdef uint64_t m, rest
    b.n = n
    b.rows = rows
    b.alive = alive
    b.mate = mate
    b.parent = scratch
    b.base = scratch + n
    b.queue = scratch + 2 * n
    b.used = <char*>(scratch + 6 * n)
    b.flag = b.used + n
    for v in range(n):
        mate[v] = -1
    rest = alive
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        if mate[v] != -1:
            continue
        m = rows[v] & alive
        while m:
            u = ctz64(m)
            m &= m - 1
            if mate[u] == -1:
                mate[v] = u
                mate[u] = v
                size += 1
                break
    rest = alive
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        if mate[v] != -1:
            continue
        end = find_path(&b, v)
        if end != -1:
            size += 1
        while end != -1:
            pv = b.parent[end]
            nxt = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = nxt
    return size


cdef class _Scratch:
    cdef int* ints
    cdef int n

    def __cinit__(self, int n):
        self.n = n
        # blossom uses [0, 7n), callers keep a mate array at [8n, 9n)
        self.ints = <int*>malloc(sizeof(int) * (9 * n + 8))
        if self.ints == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.ints)


def _rows_array(rows):
    return np.ascontiguousarray(rows, dtype=np.uint64)


def matching_mate(rows, int n, uint64_t alive):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef _Scratch s = _Scratch(max(n, 1))
    cdef cnp.ndarray[cnp.int32_t, ndim=1] mate = np.empty(max(n, 1), dtype=np.int32)
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    blossom_run(<const uint64_t*>r.data, n, alive, <int*>mate.data, s.ints)
    return [int(x) for x in mate[:n]]


def matching_size(rows, int n, uint64_t alive):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef _Scratch s = _Scratch(max(n, 1))
    cdef int* mate = s.ints + 8 * max(n, 1)
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    return blossom_run(<const uint64_t*>r.data, n, alive, mate, s.ints)


# -- Hopcroft-Karp on the implicit double cover ---------------------------

cdef struct HK:
    int n
    const uint64_t* rows
    uint64_t alive
    int* mate_l
    int* mate_r
    int* dist
    int* queue


cdef int hk_dfs(HK* h, int v) noexcept nogil:
    cdef uint64_t m = h.rows[v] & h.alive
    cdef int u, w
    while m:
        u = ctz64(m)
        m &= m - 1
        w = h.mate_r[u]
        if w == -1 or (h.dist[w] == h.dist[v] + 1 and hk_dfs(h, w)):
            h.mate_l[v] = u
            h.mate_r[u] = v
            return 1
    h.dist[v] = 1 << 29
    return 0


cdef int hk_run(const uint64_t* rows, int n, uint64_t alive, int* scratch) noexcept nogil:
    """Maximum matching of the cover; ``scratch`` holds 4n ints, mate_l first."""
    cdef HK h
    cdef int v, u, w, head, tail, found, size = 0
    cdef uint64_t m, rest
    cdef int inf = 1 << 29
    h.n = n
    h.rows = rows
    h.alive = alive
    h.mate_l = scratch
    h.mate_r = scratch + n
    h.dist = scratch + 2 * n
    h.queue = scratch + 3 * n
    for v in range(n):
        h.mate_l[v] = -1
        h.mate_r[v] = -1
    while True:
        head = 0
        tail = 0
        for v in range(n):
            h.dist[v] = inf
        rest = alive
        while rest:
            v = ctz64(rest)
            rest &= rest - 1
            if h.mate_l[v] == -1:
                h.dist[v] = 0
                h.queue[tail] = v
                tail += 1
        found = 0
        while head < tail:
            v = h.queue[head]
            head += 1
            m = rows[v] & alive
            while m:
                u = ctz64(m)
                m &= m - 1
                w = h.mate_r[u]
                if w == -1:
                    found = 1
                elif h.dist[w] == inf:
                    h.dist[w] = h.dist[v] + 1
                    h.queue[tail] = w
                    tail += 1
        if not found:
            return size
        rest = alive
        while rest:
            v = ctz64(rest)
            rest &= rest - 1
            if h.mate_l[v] == -1 and hk_dfs(&h, v):
                size += 1


def cover_mate(rows, int n, uint64_t alive):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef _Scratch s = _Scratch(max(n, 1))
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    hk_run(<const uint64_t*>r.data, n, alive, s.ints)
    return [s.ints[i] for i in range(n)]


def cover_size(rows, int n, uint64_t alive):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef _Scratch s = _Scratch(max(n, 1))
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    return hk_run(<const uint64_t*>r.data, n, alive, s.ints)


# -- subset scans -----------------------------------------------------------

cdef inline uint64_t combo_mask(int* idx, int k) noexcept nogil:
    cdef uint64_t s = 0
    cdef int i
    for i in range(k):
        s |= bit(idx[i])
    return s


cdef inline int next_combo(int* idx, int k, int n) noexcept nogil:
    """Advance to the next k-combination in lexicographic order; 0 when exhausted."""
    cdef int i = k - 1, j
    while i >= 0 and idx[i] == n - k + i:
        i -= 1
    if i < 0:
        return 0
    idx[i] += 1
    for j in range(i + 1, k):
        idx[j] = idx[j - 1] + 1
    return 1


def deletion_scan(rows, int n, int k, bint fractional):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef _Scratch s = _Scratch(max(n, 1))
    cdef int* mate = s.ints + 8 * max(n, 1)
    cdef const uint64_t* rp = <const uint64_t*>r.data
    cdef uint64_t full = full_mask(n), sm
    cdef int need = n - k, i, ok, got
    cdef int idx[64]
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    if k < 0 or k > n:
        raise ValueError("k out of range")
    for i in range(k):
        idx[i] = i
    with nogil:
        while True:
            sm = combo_mask(idx, k)
            if fractional:
                ok = hk_run(rp, n, full & ~sm, s.ints) == need
            else:
                ok = (need % 2 == 0) and 2 * blossom_run(rp, n, full & ~sm, mate, s.ints) == need
            if not ok:
                break
            if not next_combo(idx, k, n):
                sm = 0
                break
    if ok:
        return -1
    return int(sm)


cdef inline void odd_iso(const uint64_t* rows, uint64_t rem, int* odd, int* iso) noexcept nogil:
    cdef uint64_t comp, frontier, reach, f
    cdef int size
    odd[0] = 0
    iso[0] = 0
    while rem:
        comp = rem & (~rem + 1)
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                reach |= rows[ctz64(f)]
                f &= f - 1
            frontier = reach & rem & ~comp
            comp |= frontier
        size = popcount64(comp)
        odd[0] += size & 1
        iso[0] += size == 1
        rem &= ~comp


def tutte_scan(rows, int n, int k, bint isolated):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] r = _rows_array(rows)
    cdef const uint64_t* rp = <const uint64_t*>r.data
    cdef uint64_t full = full_mask(n), sm = 0
    cdef int size, i, odd, iso, hit = 0
    cdef int idx[64]
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    with nogil:
        for size in range(k, n + 1):
            for i in range(size):
                idx[i] = i
            while True:
                sm = combo_mask(idx, size)
                odd_iso(rp, full & ~sm, &odd, &iso)
                if (iso if isolated else odd) > size - k:
                    hit = 1
                    break
                if not next_combo(idx, size, n):
                    break
            if hit:
                break
    return int(sm) if hit else -1


# -- dense eigen-solvers ------------------------------------------------------

def power_iteration(a, double tol, long maxiter):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A = np.ascontiguousarray(a, dtype=np.float64)
    cdef Py_ssize_t n = A.shape[0], i, j
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xa = np.ones(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ya = np.empty(n)
    cdef double* x = <double*>xa.data
    cdef double* y = <double*>ya.data
    cdef double* ap = <double*>A.data
    cdef double rho = 0.0, res = 1e300, num, den, acc, mx, d
    cdef long it
    with nogil:
        for it in range(1, maxiter + 1):
            num = 0.0
            den = 0.0
            for i in range(n):
                acc = 0.0
                for j in range(n):
                    acc += ap[i * n + j] * x[j]
                y[i] = acc
                num += x[i] * acc
                den += x[i] * x[i]
            rho = num / den if den > 0 else 0.0
            res = 0.0
            for i in range(n):
                d = fabs(y[i] - rho * x[i])
                if d > res:
                    res = d
            if res <= tol:
                break
            mx = 0.0
            for i in range(n):
                y[i] += x[i]
                if fabs(y[i]) > mx:
                    mx = fabs(y[i])
            for i in range(n):
                x[i] = y[i] / mx
        else:
            it = -maxiter
    return rho, res, it, xa


def jacobi_eigenvalues(a, double tol, int max_sweeps):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A = np.array(a, dtype=np.float64, order="C")
    cdef Py_ssize_t n = A.shape[0], p, q, r
    cdef double* m = <double*>A.data
    cdef double scale = 0.0, off, apq, theta, t, c, s, arp, arq, app, aqq
    cdef int sweep, converged = 0
    for p in range(n * n):
        scale += m[p] * m[p]
    scale = sqrt(scale)
    if scale == 0.0:
        scale = 1.0
    with nogil:
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += m[p * n + q] * m[p * n + q]
            if sqrt(off) <= tol * scale:
                converged = 1
                break
            if sweep == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = m[p * n + q]
                    if fabs(apq) <= 1e-300:
                        continue
                    app = m[p * n + p]
                    aqq = m[q * n + q]
                    theta = (aqq - app) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for r in range(n):
                        if r == p or r == q:
                            continue
                        arp = m[r * n + p]
                        arq = m[r * n + q]
                        m[r * n + p] = c * arp - s * arq
                        m[p * n + r] = m[r * n + p]
                        m[r * n + q] = s * arp + c * arq
                        m[q * n + r] = m[r * n + q]
                    m[p * n + p] = app - t * apq
                    m[q * n + q] = aqq + t * apq
                    m[p * n + q] = 0.0
                    m[q * n + p] = 0.0
    if not converged:
        raise ArithmeticError("Jacobi sweeps did not converge")
    return np.sort(np.diag(A).copy())
