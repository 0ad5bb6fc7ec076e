import pytest
from hypothesis import given, settings

from domgame.families import (complete, corona, cycle, family_G, generalized_corona, path, star)
from domgame.graph import GraphError, build_graph, is_connected
from domgame.invariants import (connected_domination_number, domination_number, invariant_report,
                                is_connected_dominating, is_dominating, is_total_dominating,
                                minimum_connected_dominating_sets, total_domination_number)

import oracles
from test_graph import connected_graphs


@pytest.mark.parametrize("G,expected", [(complete(5), 1), (cycle(6), 2), (path(7), 3)])
def test_domination(G, expected):
    assert oracles.min_set_size(G, oracles.dominating) == expected
    k, S = domination_number(G)
    assert k == expected and is_dominating(G, S) and S.bit_count() == k


@pytest.mark.parametrize("G,expected", [(complete(2), 2), (star(5), 2), (path(4), 2)])
def test_total_domination(G, expected):
    assert oracles.min_set_size(G, oracles.total_dominating) == expected
    k, S = total_domination_number(G)
    assert k == expected and is_total_dominating(G, S)


def test_total_domination_needs_isolate_free():
    with pytest.raises(GraphError):
        total_domination_number(build_graph(3, [(0, 1)]))


def test_connected_domination_g3_unique():
    G = family_G(3)
    k, S = connected_domination_number(G)
    XY = G.vertices("x1", "x2", "x3", "y2", "y3")
    assert k == 5 and S == XY
    assert minimum_connected_dominating_sets(G) == [XY]


@pytest.mark.parametrize("G,hs", [
    (path(3), [complete(1)] * 3),
    (cycle(4), [complete(2)] * 4),
    (complete(3), [path(3), complete(1), complete(2)]),
])
def test_connected_domination_corona(G, hs):
    assert connected_domination_number(generalized_corona(G, hs))[0] == G.n


def test_connected_domination_k4():
    assert connected_domination_number(complete(4)) == (1, 0b0001)


def test_connected_domination_needs_connected():
    with pytest.raises(GraphError):
        connected_domination_number(build_graph(4, [(0, 1), (2, 3)]))


def test_witness_tie_break_is_smallest_bitset():
    # P_4: {1,2} is the only connected dominating pair
    assert connected_domination_number(path(4)) == (2, 0b0110)
    # C_4: dominating pairs {0,1},{0,2},... ; smallest mask is 0b0011
    assert domination_number(cycle(4)) == (2, 0b0011)


@settings(max_examples=120, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_against_oracle(G):
    rep = invariant_report(G)
    assert rep.gamma == oracles.min_set_size(G, oracles.dominating)
    assert rep.gamma_t == oracles.min_set_size(G, oracles.total_dominating)
    assert rep.gamma_c == oracles.min_set_size(G, oracles.connected_dominating)
    assert rep.gamma <= rep.gamma_t
    assert rep.gamma <= rep.gamma_c
    assert is_dominating(G, rep.witnesses["gamma"])
    assert is_total_dominating(G, rep.witnesses["gamma_t"])
    assert is_connected_dominating(G, rep.witnesses["gamma_c"])
    assert is_connected(G)


def test_report_on_disconnected_graph_with_isolate():
    rep = invariant_report(build_graph(3, [(0, 1)]))
    assert rep.gamma == 2 and rep.gamma_t is None and rep.gamma_c is None


def test_corona_report():
    rep = invariant_report(corona(cycle(3)))
    assert rep.gamma_c == 3
