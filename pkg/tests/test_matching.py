from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from kfcrit.graph import Graph, complete, cycle, disjoint_union, mask_of, petersen, star
from kfcrit.matching import (
    bipartite_double_cover,
    brute_force_matching_oracle,
    fractional_perfect_matching,
    has_fractional_perfect_matching,
    has_perfect_matching,
    max_matching,
)
from kfcrit.criticality import odd_and_isolated_after

from conftest import graphs, to_nx


@pytest.mark.parametrize("g, size", [(complete(4), 2), (star(3), 1), (petersen(), 5), (complete(6), 3), (cycle(5), 2)])
def test_known_sizes(g, size):
    m = max_matching(g)
    assert m.size == size and m.is_valid(g)
    if g.n <= 12:
        assert brute_force_matching_oracle(g) == size


def test_perfect_matching_examples():
    assert has_perfect_matching(complete(4))
    assert not has_perfect_matching(complete(5))
    assert not has_perfect_matching(star(3))


def test_double_cover():
    c = bipartite_double_cover(cycle(5))
    assert c.n == 10 and c.edge_count() == 10
    assert nx.is_isomorphic(to_nx(c), nx.cycle_graph(10))
    assert bipartite_double_cover(complete(2)).edge_count() == 2


def test_fractional_examples():
    ok, fm = has_fractional_perfect_matching(cycle(5))
    assert ok and fm.is_perfect(cycle(5))
    assert all(fm.weight(u, v) == 0.5 for u, v in cycle(5).edges())
    assert not has_fractional_perfect_matching(star(3))[0]


def test_converse_counterexample():
    # two disjoint 5-cycles: fractional perfect matching yes, perfect matching no
    g = disjoint_union(cycle(5), cycle(5))
    assert has_fractional_perfect_matching(g)[0]
    assert not has_perfect_matching(g)


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_matching_oracle(complete(13))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_blossom_matches_brute_force_and_networkx(g):
    m = max_matching(g)
    assert m.is_valid(g)
    assert m.size == brute_force_matching_oracle(g)
    assert m.size == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_pm_implies_fpm(g):
    if has_perfect_matching(g):
        assert has_fractional_perfect_matching(g)[0]


def _isolated_condition(g: Graph) -> bool:
    for mask in range(1 << g.n):
        s = [v for v in range(g.n) if mask >> v & 1]
        if odd_and_isolated_after(g, s)[1] > len(s):
            return False
    return True


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_fpm_matches_isolated_vertex_condition(g):
    ok, fm = has_fractional_perfect_matching(g)
    assert ok == _isolated_condition(g)
    if ok:
        assert fm.is_perfect(g)
    else:
        assert fractional_perfect_matching(g) is None
