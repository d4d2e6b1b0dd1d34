#!/usr/bin/env python3

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdscodes.errors import DimensionError
from sdscodes.coding import (
    INFINITY, Code, a_n3_reference, clique_to_code, code_to_clique, distance_to_json,
    hamming_code, hamming_distance, min_distance,
)
from sdscodes.graphs import ImplicitGraphSpec, is_clique, materialize, max_clique


def test_hamming_distance():
    assert hamming_distance("0000", "0000") == 0
    assert hamming_distance("0110", "1011") == 3
    with pytest.raises(DimensionError):
        hamming_distance("01", "011")


def test_min_distance():
    assert min_distance(Code(["000", "111"])) == 3
    assert min_distance(Code(["0011", "0101", "1111"])) == 2
    assert min_distance(Code(["101"])) == INFINITY
    assert distance_to_json(INFINITY) == "inf"
    assert distance_to_json(3) == 3
    with pytest.raises(DimensionError):
        min_distance(Code([], length=3))


def test_code_invariants():
    code = Code(["111", "000", "111"])
    assert len(code) == 2
    assert code.labels == ["000", "111"]
    assert "111" in code
    with pytest.raises(DimensionError):
        Code(["000", "0000"])
    with pytest.raises(DimensionError):
        Code([])


@pytest.mark.parametrize("r, size", [(2, 2), (3, 16), (4, 2048)])
def test_hamming_codes(r, size):
    code = hamming_code(r)
    assert code.length == (1 << r) - 1
    assert len(code) == size
    assert min_distance(code) == 3
    assert 0 in code.values


def test_hamming_code_r2():
    assert hamming_code(2).labels == ["000", "111"]
    with pytest.raises(DimensionError):
        hamming_code(1)


def test_hamming_code_is_linear():
    code = hamming_code(3)
    words = set(code.values)
    assert all(x ^ y in words for x in words for y in words)


@pytest.mark.parametrize("n, expected", [
    (1, (1, "formula")), (2, (1, "degenerate")), (3, (2, "formula")),
    (4, (None, None)), (6, (None, None)), (7, (16, "formula")), (15, (2048, "formula")),
])
def test_a_n3_reference(n, expected):
    assert a_n3_reference(n) == expected


def test_a_n3_reference_domain():
    with pytest.raises(DimensionError):
        a_n3_reference(0)


def test_codes_and_cliques():
    j3 = materialize(ImplicitGraphSpec("J", 3))
    assert is_clique(j3, code_to_clique(Code(["000", "111"])))
    j2 = materialize(ImplicitGraphSpec("J", 2))
    assert not is_clique(j2, code_to_clique(Code(["00", "11"])))
    j5 = materialize(ImplicitGraphSpec("J", 5))
    code = clique_to_code(max_clique(j5).vertices, 5)
    assert len(code) == 4
    assert min_distance(code) >= 3


@pytest.mark.property_based
@given(st.integers(2, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.sets(st.integers(0, (1 << m) - 1), min_size=2, max_size=8))))
@settings(max_examples=150, deadline=None)
def test_distance_3_codes_are_J_cliques(case):
    m, values = case
    code = Code.from_values(values, m)
    j = materialize(ImplicitGraphSpec("J", m))
    assert is_clique(j, code_to_clique(code)) == (min_distance(code) >= 3)
