from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfcrit.criticality import (
    ISOLATED,
    NO_FPM,
    NO_PM,
    ODD,
    PARITY,
    is_fractional_k_factor_critical,
    is_k_factor_critical,
    odd_component_oracle,
    isolated_vertex_oracle,
    odd_and_isolated_after,
    replay,
)
from kfcrit.families import extremal_family, realize
from kfcrit.graph import Graph, complete, cycle, star

from conftest import graphs

E912 = realize(extremal_family(9, 1, 2))


def test_definition_examples():
    assert is_k_factor_critical(complete(4), 2)
    assert is_k_factor_critical(cycle(5), 1)
    v = is_k_factor_critical(E912, 1)
    assert not v and v.violation_kind == NO_PM and v.witness_list() == [0]
    assert replay(E912, 1, v)


def test_parity_violation():
    v = is_k_factor_critical(complete(6), 1)
    assert not v and v.violation_kind == PARITY and v.witness == frozenset()
    assert replay(complete(6), 1, v)


def test_k_range():
    with pytest.raises(ValueError):
        is_k_factor_critical(complete(4), 0)
    with pytest.raises(ValueError):
        is_fractional_k_factor_critical(complete(4), 3)
    with pytest.raises(ValueError):
        odd_component_oracle(complete(25), 1)


def test_fractional_examples():
    assert is_fractional_k_factor_critical(complete(4), 2)
    assert is_fractional_k_factor_critical(E912, 1)
    v = is_fractional_k_factor_critical(star(3), 1)
    assert not v and v.violation_kind == NO_FPM and v.witness_list() == [0]
    assert replay(star(3), 1, v)


def test_oracle_examples():
    v = odd_component_oracle(E912, 1)
    assert not v and v.violation_kind == ODD and v.witness_list() == [0, 1]
    assert odd_and_isolated_after(E912, [0, 1]) == (3, 1)
    assert odd_component_oracle(complete(6), 2)
    assert isolated_vertex_oracle(E912, 1)
    # i(G - core) = delta - k = |S| - k: the boundary case holds
    assert odd_and_isolated_after(E912, [0, 1])[1] == 2 - 1
    # two pendant vertices (3, 4) hang off support vertex 0 of a triangle
    pendant = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])
    v = isolated_vertex_oracle(pendant, 1)
    assert not v and v.violation_kind == ISOLATED and v.witness_list() == [0]
    assert replay(pendant, 1, v)
    assert isolated_vertex_oracle(cycle(7), 1)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=4, max_n=11), st.integers(1, 3))
def test_oracles_agree_with_definitions(g, k):
    if k >= g.n - 1:
        return
    d_odd, o_odd = is_k_factor_critical(g, k), odd_component_oracle(g, k)
    assert d_odd.holds == o_odd.holds
    d_iso, o_iso = is_fractional_k_factor_critical(g, k), isolated_vertex_oracle(g, k)
    assert d_iso.holds == o_iso.holds
    for v in (d_odd, o_odd, d_iso, o_iso):
        if not v.holds:
            assert replay(g, k, v)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=11), st.integers(1, 3))
def test_implication_and_parity(g, k):
    if k > g.n - 2:
        return
    kfc = is_k_factor_critical(g, k)
    if kfc.holds:
        assert is_fractional_k_factor_critical(g, k).holds
    if (g.n - k) % 2:
        assert not kfc.holds


def test_witness_is_lexicographically_first():
    # deleting vertex 0 of a path P_4 leaves P_3 (no PM); 0 is the first 1-subset
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert is_k_factor_critical(g, 1).witness_list() == [1]
    v = is_k_factor_critical(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), 2)
    assert v.witness_list() == [0, 2]


def test_replay_rejects_holding_verdicts():
    assert replay(complete(4), 2, is_k_factor_critical(complete(4), 2)) is False
