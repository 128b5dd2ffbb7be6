from __future__ import annotations

import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pocgame.classical import (
    ClassicalStrategy,
    constant_strategy,
    enumerate_max,
    enumerate_max_bruteforce,
    is_parity_oblivious,
    paper_trit_strategy,
    strategy_success,
    table_success,
)
from pocgame.game import A_BIT_EVEN_PARITY, EVEN_PARITY, PREP_KEYS, YS


def _decoder(d, rows):
    return {(m, y): rows[m][y - 1] for m in range(1, d + 1) for y in YS}


def test_trit_strategy_is_oblivious():
    assert is_parity_oblivious(paper_trit_strategy())


def test_trit_strategy_scores_thirteen_eighteenths():
    assert strategy_success(paper_trit_strategy()) == Fraction(13, 18)


def test_trit_strategy_with_decoder_as_printed():
    # Message labels as printed (1 -> 010, 2 -> 011, 3 -> 100) score less.
    s = paper_trit_strategy()
    printed = ClassicalStrategy(3, s.encoder, _decoder(3, {1: (0, 1, 0), 2: (0, 1, 1), 3: (1, 0, 0)}))
    assert strategy_success(printed) < Fraction(13, 18)


def test_single_message_is_oblivious():
    assert is_parity_oblivious(constant_strategy())


def test_parity_revealing_encoder():
    enc = {k: 1 if k in EVEN_PARITY else 2 for k in PREP_KEYS}
    s = ClassicalStrategy(2, enc, _decoder(2, {1: (0, 0, 0), 2: (0, 0, 0)}))
    assert not is_parity_oblivious(s)


@pytest.mark.parametrize("bit", [0, 1])
def test_constant_strategy_scores_half(bit):
    assert strategy_success(constant_strategy(bit)) == Fraction(1, 2)


def test_generic_functional_agrees():
    for s in (paper_trit_strategy(), constant_strategy()):
        assert table_success(s) == strategy_success(s)


@pytest.mark.parametrize("kwargs", [
    dict(d=0, encoder={}, decoder={}),
    dict(d=1, encoder={(1, 0): 1}, decoder={(1, y): 0 for y in YS}),
    dict(d=1, encoder={k: 2 for k in PREP_KEYS}, decoder={(1, y): 0 for y in YS}),
    dict(d=1, encoder={k: 1 for k in PREP_KEYS}, decoder={(1, 1): 0}),
    dict(d=1, encoder={k: 1 for k in PREP_KEYS}, decoder={(1, y): 2 for y in YS}),
])
def test_strategy_validation(kwargs):
    with pytest.raises(ValueError):
        ClassicalStrategy(**kwargs)


def test_bound_for_trits_is_exact_and_fast():
    start = time.perf_counter()
    res = enumerate_max(3)
    assert time.perf_counter() - start < 1.0
    assert res.max_success == Fraction(13, 18)
    assert res.strategies_searched == 3**6
    assert all(is_parity_oblivious(s) for s in res.argmax)
    assert all(strategy_success(s) == res.max_success for s in res.argmax)


def test_bound_for_one_message():
    assert enumerate_max(1).max_success == Fraction(1, 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_larger_alphabets_do_not_help(d):
    assert enumerate_max(d).max_success == Fraction(13, 18)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_greedy_decoder_matches_bruteforce(d):
    assert enumerate_max_bruteforce(d) == enumerate_max(d).max_success


@pytest.mark.parametrize("d", [0, 7])
def test_alphabet_domain(d):
    with pytest.raises(ValueError):
        enumerate_max(d)


def test_a_bit_split_has_no_classical_gap():
    # hiding only a leaves x free to send, which already reaches 5/6
    assert enumerate_max(3, A_BIT_EVEN_PARITY).max_success == Fraction(5, 6)


@st.composite
def strategies(draw, d=3):
    enc = {k: draw(st.integers(1, d)) for k in PREP_KEYS}
    dec = {(m, y): draw(st.integers(0, 1)) for m in range(1, d + 1) for y in YS}
    return ClassicalStrategy(d, enc, dec)


@settings(max_examples=300)
@given(strategies())
def test_no_oblivious_strategy_beats_bound(s):
    p = strategy_success(s)
    assert (p * 18).denominator == 1
    if is_parity_oblivious(s):
        assert p <= Fraction(13, 18)
