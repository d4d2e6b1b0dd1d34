#!/usr/bin/env python3

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdscodes.errors import BudgetExceeded, DimensionError, FileFormatError, InvalidCliqueError
from sdscodes.dynamics import all_states
from sdscodes.graphs import (
    ExplicitGraph, ImplicitGraphSpec, adjacent, brute_force_clique_number, coloring_upper_bound,
    contains_subsequence, difference_map, greedy_lower_bound, in_D, is_clique, materialize,
    max_clique, prefix_sum_T, theta, theta_inverse,
)
from sdscodes.graphs.words import difference_int, prefix_sum_int
from sdscodes.coding import hamming_code
from sdscodes.construction import seed_clique


def naive_contains(x, w):
    return any(''.join(x[i] for i in idx) == w for idx in itertools.combinations(range(len(x)), len(w)))


def spec(text):
    return ImplicitGraphSpec.parse(text)


# ============================================================================
#  Words
# ============================================================================

def test_subsequence_examples():
    assert contains_subsequence("10110", "100")
    assert not contains_subsequence("10110", "001")
    assert contains_subsequence("0101", "11")
    assert not contains_subsequence("0100", "11")
    assert in_D(4, "101", "1001")
    assert not in_D(4, "101", "0011")
    with pytest.raises(DimensionError):
        in_D(3, "101", "0101")


@pytest.mark.parametrize("n", range(1, 9))
def test_greedy_scan_matches_enumeration(n):
    for x in all_states(n):
        for w in ("101", "111", "100", "0110"):
            assert contains_subsequence(x, w) == naive_contains(x.label, w)


@pytest.mark.property_based
@given(st.text(alphabet="01", max_size=14), st.text(alphabet="01", min_size=1, max_size=5))
@settings(max_examples=300)
def test_greedy_scan_matches_enumeration_on_random_words(x, w):
    assert contains_subsequence(x, w) == naive_contains(x, w)


def test_theta():
    assert theta("0101").label == "101"
    assert theta_inverse("101").label == "0101"
    with pytest.raises(DimensionError):
        theta("1101")


def test_prefix_sum_and_difference_are_inverse():
    assert prefix_sum_T("111").label == "101"
    assert difference_map("101").label == "111"
    for x in all_states(6):
        assert difference_map(prefix_sum_T(x)) == x
        assert prefix_sum_int(x.value, 6) == prefix_sum_T(x).value
        assert difference_int(x.value) == difference_map(x).value


def test_prefix_sum_sends_111_to_101():
    for x in all_states(7):
        assert contains_subsequence(x, "111") == contains_subsequence(prefix_sum_T(x), "101")


# ============================================================================
#  Word graphs
# ============================================================================

def test_graph_spec_parsing():
    s = spec("HatH:8")
    assert (s.kind, s.dimension, s.vertex_count) == ("HatH", 8, 128)
    assert spec("J:7").vertex_count == 128
    assert str(spec(" H:6 ")) == "H:6"
    with pytest.raises(FileFormatError):
        spec("J7")
    with pytest.raises(DimensionError):
        spec("K:3")
    with pytest.raises(DimensionError):
        spec("J:0")


def test_adjacency_examples():
    assert adjacent(spec("HatH:5"), "00000", "01011")
    assert not adjacent(spec("HatH:5"), "00000", "01000")
    assert adjacent(spec("J:3"), "000", "111")
    assert not adjacent(spec("J:3"), "001", "111")
    with pytest.raises(DimensionError):
        adjacent(spec("HatH:3"), "000", "100")
    with pytest.raises(DimensionError):
        adjacent(spec("J:3"), "000", "0111")


@pytest.mark.parametrize("m", range(1, 7))
def test_J_adjacency_is_distance_at_least_3(m):
    g = materialize(spec(f"J:{m}"))
    for x in range(1 << m):
        for y in range(1 << m):
            assert g.has_edge(x, y) == (bin(x ^ y).count("1") >= 3)


def test_small_graph_sizes():
    hat3 = materialize(spec("HatH:3"))
    assert (len(hat3), hat3.edge_count) == (4, 0)
    j3 = materialize(spec("J:3"))
    assert (len(j3), j3.edge_count) == (8, 4)
    assert sorted(j3.edges()) == [(0, 7), (1, 6), (2, 5), (3, 4)]
    h2 = materialize(spec("H:2"))
    assert (len(h2), h2.edge_count) == (4, 0)
    assert j3.label(5) == "101"


@pytest.mark.parametrize("kind, m", [("HatH", 5), ("H", 4), ("J", 5)])
def test_materialized_rows_match_adjacency(kind, m):
    s = ImplicitGraphSpec(kind, m)
    g = materialize(s)
    assert len(g) == s.vertex_count
    vertices = list(s.vertices())
    for x in vertices:
        for y in vertices:
            if x != y:
                assert g.has_edge(x.value, y.value) == adjacent(s, x, y)


@pytest.mark.parametrize("n", range(2, 8))
def test_theta_maps_hat_graph_onto_H(n):
    # vertices of HatH(n + 1) start with 0, so dropping it keeps the encoding
    assert materialize(spec(f"HatH:{n + 1}")).rows == materialize(spec(f"H:{n}")).rows


@pytest.mark.parametrize("n", range(1, 9))
def test_prefix_sum_maps_J_onto_H(n):
    j, h = materialize(spec(f"J:{n}")), materialize(spec(f"H:{n}"))
    for x in range(1 << n):
        tx = prefix_sum_int(x, n)
        for y in range(x + 1, 1 << n):
            assert j.has_edge(x, y) == h.has_edge(tx, prefix_sum_int(y, n))


def test_materialization_cap():
    with pytest.raises(BudgetExceeded):
        materialize(spec("J:17"))
    with pytest.raises(BudgetExceeded):
        materialize(spec("J:6"), max_dimension=5)


def test_to_networkx():
    g = materialize(spec("J:4")).to_networkx()
    assert g.number_of_nodes() == 16
    assert g.number_of_edges() == 16 * 5 // 2


# ============================================================================
#  Clique solver
# ============================================================================

def cycle_graph(k):
    return ExplicitGraph.from_edges(range(k), [(i, (i + 1) % k) for i in range(k)])


def test_complete_and_edgeless_graphs():
    k4 = ExplicitGraph.from_edges(range(4), itertools.combinations(range(4), 2))
    result = max_clique(k4)
    assert (result.size, result.optimal, result.upper_bound) == (4, True, 4)
    assert coloring_upper_bound(k4) == 4
    empty = ExplicitGraph.from_edges(range(5), [])
    assert max_clique(empty).size == 1
    assert coloring_upper_bound(empty) == 1


@pytest.mark.parametrize("text, omega", [
    ("J:2", 1), ("J:3", 2), ("J:4", 2), ("J:5", 4), ("J:6", 8),
    ("H:3", 2), ("H:5", 4), ("HatH:4", 2), ("HatH:6", 4), ("HatH:7", 8),
])
def test_word_graph_clique_numbers(text, omega):
    g = materialize(spec(text))
    result = max_clique(g)
    assert result.optimal
    assert result.size == result.upper_bound == omega
    assert is_clique(g, result.vertices)
    assert 0 in result.vertices


@pytest.mark.slow
@pytest.mark.parametrize("text", ["J:7", "H:7", "HatH:8"])
def test_clique_number_16(text):
    result = max_clique(materialize(spec(text)))
    assert result.optimal and result.size == 16


def test_symmetry_reduction_keeps_the_clique_number():
    g = materialize(spec("J:5"))
    assert max_clique(g, use_symmetry=False).size == max_clique(g).size == 4


@pytest.mark.property_based
@given(st.integers(1, 14), st.floats(0.1, 0.9), st.integers(0, 2 ** 16))
@settings(max_examples=60, deadline=None)
def test_clique_number_matches_networkx(k, p, seed):
    reference = nx.gnp_random_graph(k, p, seed=seed)
    g = ExplicitGraph.from_edges(range(k), reference.edges())
    result = max_clique(g)
    expected = max(len(c) for c in nx.find_cliques(reference))
    assert result.optimal and result.size == expected
    assert brute_force_clique_number(g) == expected
    assert greedy_lower_bound(g).size <= expected <= coloring_upper_bound(g)


def test_node_budget_returns_bounds():
    g = cycle_graph(5)
    stopped = max_clique(g, max_nodes=1)
    assert not stopped.optimal
    assert (stopped.size, stopped.upper_bound) == (2, 3)
    full = max_clique(g)
    assert full.optimal and (full.size, full.upper_bound) == (2, 2)


def test_clique_result_report():
    g = materialize(spec("J:3"))
    report = max_clique(g).to_dict(g)
    assert report["vertices"] == ["000", "111"]
    assert report["size"] == 2 and report["optimal"]


def test_is_clique():
    g = materialize(spec("J:7"))
    assert is_clique(g, hamming_code(3).values)
    assert is_clique(g, [5])
    assert not is_clique(g, [0, 3])
    with pytest.raises(DimensionError):
        is_clique(g, [0, 128])


def test_seeds():
    g = materialize(spec("J:7"))
    assert greedy_lower_bound(g, hamming_code(3).values).size == 16
    with pytest.raises(InvalidCliqueError):
        max_clique(g, seed=[0, 1])
    assert len(seed_clique(spec("HatH:8"))) == 16
    assert len(seed_clique(spec("H:7"))) == 16
    assert seed_clique(spec("J:6")) == []
    hat = materialize(spec("HatH:8"))
    assert is_clique(hat, seed_clique(spec("HatH:8")))


def test_seed_is_translated_to_contain_zero():
    g = materialize(spec("J:7"))
    code = hamming_code(3).values
    shifted = [v ^ 1 for v in code]
    result = max_clique(g, seed=shifted, max_nodes=1)
    assert result.size == 16
    assert 0 in result.vertices


def test_brute_force_limit():
    with pytest.raises(DimensionError):
        brute_force_clique_number(materialize(spec("J:5")))
