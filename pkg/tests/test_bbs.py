import itertools

import pytest
from hypothesis import given, strategies as st

from krpaths.bbs import (
    BBSOverflowError,
    carrier_step,
    evolution_table,
    soliton_tau,
    solitons,
    stable_length,
    t_infinity,
    takahashi_satsuma,
)
from krpaths.crystal import highest_element, weight
from krpaths.statistics import tau

TABLE_A = ["4312111", "1141321", "1114113", "1111411", "1111141", "1111114", "1111111"]
TABLE_B = ["4321111", "1114321", "1111114", "1111111", "1111111", "1111111", "1111111"]
TABLE_C = ["3223123", "1112312", "1111231", "1111123", "1111112", "1111111", "1111111"]

words = st.lists(st.integers(1, 4), min_size=1, max_size=10).map(tuple)


def as_rows(table):
    return tuple(tuple(int(c) for c in row) for row in table)


@pytest.mark.parametrize("table", [TABLE_A, TABLE_B, TABLE_C])
@pytest.mark.parametrize("alg", ["carrier", "ts"])
def test_evolution_tables(table, alg):
    assert evolution_table(table[0], 7, alg) == as_rows(table)


def test_examples():
    assert t_infinity("4312111") == tuple(((x,),) for x in (1, 1, 4, 1, 3, 2, 1))
    assert takahashi_satsuma("3223123") == (1, 1, 1, 2, 3, 1, 2)
    assert soliton_tau("4312111") == 11
    assert soliton_tau("4321111") == 7
    assert soliton_tau("1111") == 0


def test_vacuum_is_fixed():
    vac = (1,) * 6
    path, trace = carrier_step(vac, 1, 3)
    assert path == tuple(((1,),) for _ in vac)
    assert trace[-1] == highest_element(1, 3)
    assert evolution_table(vac, 3) == (vac,) * 3
    assert takahashi_satsuma(vac) == vac


def test_overflow_mode():
    with pytest.raises(BBSOverflowError):
        takahashi_satsuma("3223123", overflow="error")
    assert takahashi_satsuma("32231231111", overflow="error")[:7] == (1, 1, 1, 2, 3, 1, 2)


@given(words, st.integers(1, 3), st.integers(1, 5))
def test_carrier_weight_balance(w, a, l):
    path, trace = carrier_step(w, a, l)
    n = max(max(w), a) + 1
    before = [x + y for x, y in zip(weight(path, n), weight((trace[-1],), n))]
    after = [x + y for x, y in zip(weight(tuple(((x,),) for x in w), n), weight((trace[0],), n))]
    assert before == after


@given(words)
def test_carrier_returns_when_padded(w):
    padded = w + (1,) * len(w)
    path, trace = carrier_step(padded, 1, len(w))
    assert trace[-1] == trace[0]
    assert weight(path, 4) == weight(tuple(((x,),) for x in padded), 4)


@given(words)
def test_stable_length_bounded_by_ball_count(w):
    balls = sum(1 for x in w if x != 1)
    assert stable_length(w) <= max(1, balls)


@given(words)
def test_takahashi_satsuma_matches_carrier(w):
    assert takahashi_satsuma(w) == tuple(f[0][0] for f in t_infinity(w))
    padded = w + (1,) * len(w)
    assert takahashi_satsuma(padded, overflow="error") == tuple(f[0][0] for f in t_infinity(padded))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7).map(tuple))
def test_soliton_lengths_stabilize(w):
    steps = 2 * len(w) + 2
    padded = w + (1,) * (len(w) * (steps + 1))
    rows = evolution_table(padded, steps)
    lengths = [tuple(map(len, solitons(r))) for r in rows]
    assert len(set(lengths[len(w):])) == 1


def test_soliton_tau_matches_tau_short_paths():
    for length in range(1, 6):
        for w in itertools.product(range(1, 5), repeat=length):
            assert soliton_tau(w) == tau(w)
