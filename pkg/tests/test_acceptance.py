"""Acceptance gate: every criterion at its stated tolerance and time budget.

Each test records one ``CRITERION n: PASS|FAIL`` line (shown in the pytest
terminal summary) and then asserts the same verdict.
"""

from __future__ import annotations

import random
import time

import numpy as np
import pytest

from kfcrit import _kernels
from kfcrit.campaign import (
    composition_instances,
    composition_edge_difference,
    core_edge_difference,
    part_compositions,
    check_unit_composition,
    check_composition_rho,
    check_composition_edges,
    smallest_admissible,
    verify_core_rho,
    verify_core_edges,
    verify_extremal_not_critical,
    verify_theorem_sharpness,
    verify_threshold_comparisons,
)
from kfcrit.connectivity import vertex_connectivity
from kfcrit.criticality import (
    is_fractional_k_factor_critical,
    is_k_factor_critical,
    odd_component_oracle,
    isolated_vertex_oracle,
)
from kfcrit.families import CliqueJoinFamily, class_ranges, extremal_family, realize
from kfcrit.graph import Graph, complete, cycle, disjoint_union
from kfcrit.matching import brute_force_matching_oracle, has_fractional_perfect_matching, has_perfect_matching, max_matching
from kfcrit.spectral import perron_vector, rho_oracle_dense, rho_power, rho_quotient

from conftest import ACCEPTANCE, random_corpus

pytestmark = pytest.mark.acceptance


def record(number: int, ok: bool, elapsed: float, budget: float, detail: str) -> None:
    within = elapsed < budget
    verdict = "PASS" if ok and within else "FAIL"
    line = f"CRITERION {number}: {verdict} ({elapsed:.1f}s / {budget:.0f}s budget, {_kernels.BACKEND}) {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line
    assert within, line


def _grid_families():
    for s in range(1, 6):
        for t in range(2, 5):
            for parts in part_compositions(t, 40 - s):
                yield CliqueJoinFamily(s, parts)


def test_criterion_1_dual_route_spectral_agreement():
    start = time.perf_counter()
    count, worst_pq, worst_dense, bad = 0, 0.0, 0.0, None
    for f in _grid_families():
        g = realize(f)
        q, p, d = rho_quotient(f), rho_power(g).rho, rho_oracle_dense(g)
        e1, e2 = abs(q - p), max(abs(q - d), abs(p - d))
        worst_pq, worst_dense = max(worst_pq, e1), max(worst_dense, e2)
        if (e1 > 1e-8 or e2 > 1e-8) and bad is None:
            bad = f.literal()
        count += 1
    elapsed = time.perf_counter() - start
    record(1, bad is None and count == 28075, elapsed, 60,
           f"{count} families, max|quot-power|={worst_pq:.1e}, max dev from dense={worst_dense:.1e}"
           + (f", first failure {bad}" if bad else ""))


def test_criterion_2_part_composition_spectral_inequality():
    start = time.perf_counter()
    count, worst, failures = 0, np.inf, []
    for s, parts, p in composition_instances((1, 5), (2, 4), (1, 3), 40):
        r = check_composition_rho(s, parts, p) if p > 1 else check_unit_composition(s, parts)
        count += 1
        worst = min(worst, r.margin)
        if not (r.status == "verified" and r.margin > 1e-9):
            failures.append(r.params)
    elapsed = time.perf_counter() - start
    record(2, not failures and count > 0, elapsed, 60,
           f"{count} instances, min margin {worst:.3e}" + (f", failures {failures[:3]}" if failures else ""))


def _core_grid():
    for k in (1, 2):
        for d in range(k + 2, k + 6):
            bound = 8 * d - 5 * k + 20
            bound += (bound - k) % 2
            for n in (bound, bound + 2):
                yield k, d, n


def test_criterion_3_core_size_spectral_comparison():
    start = time.perf_counter()
    results = [verify_core_rho(k, d, n) for k, d, n in _core_grid()]
    elapsed = time.perf_counter() - start
    ok = len(results) == 16 and all(r.status == "verified" and r.margin > 1e-9 for r in results)
    record(3, ok, elapsed, 10, f"{len(results)} instances, min margin {min(r.margin for r in results):.3e}")


def test_criterion_4_exact_edge_counts_and_difference_formulas():
    start = time.perf_counter()
    count, failures = 0, []
    for s, parts, p in composition_instances((1, 5), (2, 4), (1, 3), 40):
        r = check_composition_edges(s, parts, p)
        count += 1
        if r.status != "verified" or r.rhs - r.lhs != composition_edge_difference(parts, p):
            failures.append(r.params)
    for k, d, n in _core_grid():
        r = verify_core_edges(k, d, n)
        count += 1
        if r.status != "verified" or r.rhs - r.lhs != core_edge_difference(k, d):
            failures.append(r.params)
    elapsed = time.perf_counter() - start
    record(4, not failures, elapsed, 10, f"{count} exact instances" + (f", failures {failures[:3]}" if failures else ""))


def test_criterion_5_extremal_graph_not_critical():
    start = time.perf_counter()
    count, failures = 0, []
    for k in (1, 2, 3):
        for d in range(k + 1, k + 4):
            base = 2 * d - k + 6
            for n in (base, base + 2, base + 4):
                r = verify_extremal_not_critical(k, d, n)
                count += 1
                if not (r.status == "verified" and r.lhs == d - k + 2):
                    failures.append(r.params)
    elapsed = time.perf_counter() - start
    record(5, not failures and count == 27, elapsed, 300, f"{count} instances, o(G-core) = delta-k+2 on all"
           if not failures else f"failures {failures}")


def test_criterion_6_spectral_sharpness_n31():
    start = time.perf_counter()
    fam = extremal_family(31, 1, 2)
    g = realize(fam)
    facts = {
        "structure": fam.literal() == "s=2;parts=25,3,1",
        "2-connected": vertex_connectivity(g) == 2,
        "fractional 1-fc": is_fractional_k_factor_critical(g, 1).holds,
        "not 1-fc": not is_k_factor_critical(g, 1).holds,
    }
    base = rho_power(g).rho
    missing = g.missing_edges()
    min_gain, all_critical = np.inf, True
    for u, v in missing:
        h = g.with_edge(u, v)
        min_gain = min(min_gain, rho_power(h).rho - base)
        all_critical &= is_k_factor_critical(h, 1).holds
    facts["rho increases"] = min_gain > 1e-9
    facts["augmentations 1-fc"] = all_critical
    campaign = verify_theorem_sharpness(31, 1, 2, "spectral")
    facts["campaign verdict"] = all(r.status == "verified" for r in campaign)
    elapsed = time.perf_counter() - start
    failed = [k for k, v in facts.items() if not v]
    record(6, not failed, elapsed, 300,
           f"{fam.literal()}, {len(missing)} augmentations, min rho gain {min_gain:.4f}"
           + (f", failed: {failed}" if failed else ""))


def test_criterion_7_size_sharpness_smallest_instance():
    start = time.perf_counter()
    n, k, d = smallest_admissible("size", 25)
    results = verify_theorem_sharpness(n, k, d, "size")
    g = realize(extremal_family(n, k, d))
    fresh = all(is_k_factor_critical(g.with_edge(u, v), k).holds for u, v in g.missing_edges())
    ok = (n, k, d) == (15, 1, 2) and fresh and all(r.status == "verified" for r in results)
    elapsed = time.perf_counter() - start
    record(7, ok, elapsed, 300, f"(n,k,delta)=({n},{k},{d}), |E|={g.edge_count()}, "
           f"{len(g.missing_edges())} augmentations all {k}-factor-critical={fresh}")


def test_criterion_8_threshold_comparisons():
    start = time.perf_counter()
    triples = [(n, k, d) for k in (1, 2) for d in range(k + 1, k + 6) for n in (2 * d - k + 6, 2 * d - k + 16)]
    failures = []
    for n, k, d in triples:
        for r in verify_threshold_comparisons(n, k, d):
            if not (r.status == "verified" and r.margin > 1e-9):
                failures.append(f"{r.claim}@(n={n},k={k},delta={d}) margin {r.margin:.4f}")
    elapsed = time.perf_counter() - start
    record(8, not failures and len(triples) == 20, elapsed, 10,
           f"{len(triples)} triples" + (f", refuted: {failures}" if failures else ", all strict"))


def _isolated_scan(g: Graph) -> bool:
    """i(G-S) <= |S| for every S, by direct enumeration (independent of the library)."""
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    for s in range(1 << n):
        alive = full & ~s
        iso = sum(1 for v in range(n) if alive >> v & 1 and rows[v] & alive == 0)
        if iso > s.bit_count():
            return False
    return True


def test_criterion_9_characterization_oracles():
    start = time.perf_counter()
    corpus = random_corpus(500, 12)
    mismatches = {"odd-components": 0, "isolated": 0, "matching": 0, "fpm": 0}
    for i, g in enumerate(corpus):
        for k in (1, 2, 3):
            if k > g.n - 2:
                continue
            if odd_component_oracle(g, k).holds != is_k_factor_critical(g, k).holds:
                mismatches["odd-components"] += 1
            if isolated_vertex_oracle(g, k).holds != is_fractional_k_factor_critical(g, k).holds:
                mismatches["isolated"] += 1
        if max_matching(g).size != brute_force_matching_oracle(g):
            mismatches["matching"] += 1
        if has_fractional_perfect_matching(g)[0] != _isolated_scan(g):
            mismatches["fpm"] += 1
    elapsed = time.perf_counter() - start
    record(9, not any(mismatches.values()), elapsed, 600, f"{len(corpus)} graphs, mismatches {mismatches}")


def test_criterion_10_property_suite():
    start = time.perf_counter()
    rng = random.Random(99)
    checks = {}
    mono = True
    for _ in range(300):
        n = rng.randint(2, 14)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        if g.missing_edges():
            u, v = rng.choice(g.missing_edges())
            mono &= rho_power(g.with_edge(u, v)).rho >= rho_power(g).rho - 1e-10
    checks["monotonicity"] = mono
    checks["rho(K_n)=n-1"] = all(abs(rho_power(complete(n)).rho - (n - 1)) <= 1e-9 for n in range(1, 30))
    worst = 0.0
    for k in (1, 2):
        for d in range(k + 1, k + 4):
            for n in (2 * d - k + 6, 2 * d - k + 12):
                f = extremal_family(n, k, d)
                x = perron_vector(realize(f)).entries
                worst = max(worst, max(float(np.ptp(x[list(c)])) for c in class_ranges(f)))
    checks["perron class constancy"] = worst <= 1e-8
    parity, implication = True, True
    for g in random_corpus(200, 11, seed=5):
        for k in (1, 2, 3):
            if k > g.n - 2:
                continue
            kfc = is_k_factor_critical(g, k).holds
            parity &= not ((g.n - k) % 2 and kfc)
        if has_perfect_matching(g):
            implication &= has_fractional_perfect_matching(g)[0]
    checks["parity law"] = parity
    checks["PM => FPM"] = implication
    c55 = disjoint_union(cycle(5), cycle(5))
    checks["C5+C5 FPM without PM"] = has_fractional_perfect_matching(c55)[0] and not has_perfect_matching(c55)
    elapsed = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    record(10, not failed, elapsed, 300, f"{len(checks)} properties, perron deviation {worst:.1e}"
           + (f", failed: {failed}" if failed else ""))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
