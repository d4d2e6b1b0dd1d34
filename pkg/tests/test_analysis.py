#!/usr/bin/env python3

import pytest

from sdscodes.analysis import (
    clique_chain, fixed_point_exhaustive, fixed_point_sweep, non_clique_sweep, period_two_sweep,
)


def test_clique_chain():
    df = clique_chain(2, 6)
    assert df["m"].tolist() == [2, 3, 4, 5, 6]
    for column in ("omega_hatH", "omega_H", "omega_J"):
        assert df[column].tolist() == [1, 2, 2, 4, 8]
    assert df["a_ref"].tolist()[:2] == [1, 2]
    assert df["a_ref"].isna().tolist() == [False, False, True, True, True]
    assert df["optimal"].all() and df["agree"].all()


@pytest.mark.slow
def test_clique_chain_up_to_7():
    df = clique_chain(7, 7)
    assert df.loc[0, "omega_J"] == df.loc[0, "a_ref"] == 16


def test_period_two_sweep():
    summary = period_two_sweep(150, n_max=6, seed=1)
    assert summary["violations"] == 0
    assert summary["trials"] == 150
    assert sum(summary["per_n"].values()) == 150


def test_fixed_point_sweep():
    assert fixed_point_sweep(150, n_max=9, seed=2)["violations"] == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fixed_point_exhaustive(n):
    assert fixed_point_exhaustive(n) == 0


def test_non_clique_sweep():
    summary = non_clique_sweep(150, seed=3)
    assert summary["violations"] == 0


def test_sweeps_are_reproducible():
    assert period_two_sweep(40, n_max=5, seed=7) == period_two_sweep(40, n_max=5, seed=7)


@pytest.mark.slow
def test_large_sweeps():
    assert period_two_sweep(10000, seed=11)["violations"] == 0
    assert fixed_point_sweep(10000, seed=12)["violations"] == 0
    assert non_clique_sweep(10000, seed=13)["violations"] == 0
