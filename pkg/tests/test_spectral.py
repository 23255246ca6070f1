from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfcrit.families import CliqueJoinFamily, class_ranges, extremal_family, large_core_family, parse_family, realize
from kfcrit.graph import complete, cycle, disjoint_union, path
from kfcrit.spectral import (
    perron_vector,
    quotient_matrix,
    rho_oracle_dense,
    rho_power,
    rho_quotient,
    spectrum_dense,
)

from conftest import graphs, nx_family, nx_rho, to_nx

# frozen from numpy.linalg.eigvalsh on independently built networkx graphs
RHO_FROZEN = {
    "s=2;parts=3,3,1": 5.171029785603066,
    "s=2;parts=5,3,1": 6.548467471265326,
    "s=2;parts=4,3,2": 5.986280903741726,
    "s=2;parts=25,3,1": 26.024466084042857,
    "s=3;parts=3,3,1": 6.480416678088767,
    "s=2;parts=5,3": 6.443257366366325,
    "s=3;parts=35,3,1,1": 37.03341106573298,
    "s=2;parts=36,3,2": 37.01496958011085,
}


@pytest.mark.parametrize("literal, expected", sorted(RHO_FROZEN.items()))
def test_frozen_values(literal, expected):
    f = parse_family(literal)
    assert rho_quotient(f) == pytest.approx(expected, abs=1e-9)
    assert rho_power(realize(f)).rho == pytest.approx(expected, abs=1e-9)


def test_quotient_matrix_example():
    q = quotient_matrix(parse_family("s=2;parts=3,3,1"))
    assert q.tolist() == [[1, 3, 3, 1], [2, 2, 0, 0], [2, 0, 2, 0], [2, 0, 0, 0]]
    assert quotient_matrix(CliqueJoinFamily(0, [6])).tolist() == [[5]]


@given(st.builds(CliqueJoinFamily, st.integers(1, 4), st.lists(st.integers(1, 6), min_size=1, max_size=4)))
def test_quotient_row_sums_are_degrees(f):
    q = quotient_matrix(f)
    degs = realize(f).degrees()
    for row, cls in zip(q, class_ranges(f)):
        assert all(degs[v] == row.sum() for v in cls)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_complete_graph(n):
    assert rho_quotient(CliqueJoinFamily(0, [n])) == pytest.approx(n - 1, abs=1e-12)
    assert rho_power(complete(n)).rho == pytest.approx(n - 1, abs=1e-9)


def test_trivial_graphs():
    assert rho_power(disjoint_union(complete(3), complete(2))).rho == pytest.approx(2, abs=1e-9)
    assert rho_power(path(3)).rho == pytest.approx(math.sqrt(2), abs=1e-9)
    assert rho_oracle_dense(complete(4)) == pytest.approx(3, abs=1e-12)
    assert rho_oracle_dense(cycle(4)) == pytest.approx(2, abs=1e-12)


def test_extremal_bounds():
    f = extremal_family(9, 1, 2)
    v = rho_quotient(f)
    assert 9 - 2 + 1 - 4 < v < 8
    assert rho_oracle_dense(realize(f)) == pytest.approx(v, abs=1e-8)


@settings(max_examples=100)
@given(graphs(min_n=1, max_n=14))
def test_power_and_dense_agree_with_numpy(g):
    expected = float(np.linalg.eigvalsh(g.adjacency_matrix())[-1]) if g.n else 0.0
    assert rho_power(g).rho == pytest.approx(expected, abs=1e-8)
    assert np.allclose(spectrum_dense(g), np.linalg.eigvalsh(g.adjacency_matrix()), atol=1e-9)


@settings(max_examples=100)
@given(graphs(min_n=2, max_n=12), st.data())
def test_spanning_subgraph_monotonicity(g, data):
    missing = g.missing_edges()
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert rho_power(g.with_edge(u, v)).rho >= rho_power(g).rho - 1e-9


def test_perron_vector_complete():
    x = perron_vector(complete(6)).entries
    assert np.allclose(x, 1.0, atol=1e-10)


def test_perron_vector_requires_connected():
    with pytest.raises(ValueError):
        perron_vector(disjoint_union(complete(2), complete(2)))


@pytest.mark.parametrize("n,k,d", [(9, 1, 2), (12, 2, 3), (15, 1, 4), (20, 2, 5)])
def test_perron_class_constancy(n, k, d):
    f = extremal_family(n, k, d)
    x = perron_vector(realize(f)).entries
    for cls in class_ranges(f):
        vals = x[list(cls)]
        assert np.ptp(vals) <= 1e-8


@pytest.mark.parametrize("s,k,n", [(3, 1, 11), (3, 1, 13), (4, 2, 14), (4, 1, 17)])
def test_perron_entry_ordering(s, k, n):
    # classes: core, big clique, K_3, singletons
    f = large_core_family(n, k, s)
    x = perron_vector(realize(f)).entries
    r = class_ranges(f)
    core, big, tri, single = (x[r[i][0]] for i in range(4))
    assert core > big and tri > single
    if n == 2 * s - k + 6:
        assert big == pytest.approx(tri, abs=1e-10)  # the big clique is itself a K_3
    else:
        assert big > tri


def test_rho_power_rejects_bad_input():
    with pytest.raises(ValueError):
        rho_power(complete(3), tol=0)
    with pytest.raises(ValueError):
        spectrum_dense(complete(65))


def test_quotient_matches_independent_build_on_grid():
    for s in range(1, 4):
        for parts in [(4, 3), (6, 3, 1), (5, 3, 2, 2)]:
            expected = nx_rho(nx_family(s, parts))
            assert rho_quotient(CliqueJoinFamily(s, parts)) == pytest.approx(expected, abs=1e-9)
