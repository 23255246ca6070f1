"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from kfcrit import _pure
from kfcrit.families import extremal_family, realize

try:
    from kfcrit import _core
except ImportError:
    _core = None


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    # single-edge augmentations of extremal graphs are critical, so scans run to completion
    e31 = realize(extremal_family(31, 1, 2))
    c31 = e31.with_edge(*e31.missing_edges()[0])
    e40 = realize(extremal_family(40, 2, 4))
    c15 = realize(extremal_family(15, 1, 2))
    c15 = c15.with_edge(*c15.missing_edges()[0])
    a = e40.adjacency_matrix()
    yield "blossom, extremal n=40", lambda k, rows: k.matching_size(rows, e40.n, e40.full_mask), e40
    yield "1-deletion scan (full), n=31", lambda k, rows: k.deletion_scan(rows, c31.n, 1, False), c31
    yield "fractional 2-deletion scan, n=40", lambda k, rows: k.deletion_scan(rows, e40.n, 2, True), e40
    yield "odd-component scan (full), n=15", lambda k, rows: k.tutte_scan(rows, c15.n, 1, False), c15
    yield "power iteration, n=40", lambda k, rows: k.power_iteration(a, 1e-10, 10**6), e40
    yield "Jacobi spectrum, n=40", lambda k, rows: k.jacobi_eigenvalues(a.copy(), 1e-15, 100), e40


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if _core is None:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'kernel':38s} {'python':>11s} {'cython':>11s} {'speedup':>8s}")
    for name, fn, g in cases():
        tp = _best(lambda: fn(_pure, g.rows), args.repeat)
        if _core is None:
            print(f"{name:38s} {tp * 1e3:9.2f}ms")
            continue
        tc = _best(lambda: fn(_core, g.word_rows()), args.repeat)
        print(f"{name:38s} {tp * 1e3:9.2f}ms {tc * 1e3:9.3f}ms {tp / tc:7.0f}x")


if __name__ == "__main__":
    main()
