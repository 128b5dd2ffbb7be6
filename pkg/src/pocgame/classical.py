"""Exhaustive search over deterministic parity-oblivious classical strategies.

A deterministic strategy is an encoder ``(x, a) -> m in {1..d}`` and a decoder
``(m, y) -> b``.  Preparation noncontextuality forces every individual
deterministic strategy to be parity oblivious: each message must be used by
as many even-class inputs as odd-class inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .game import (
    EVEN_PARITY,
    NUM_TRIPLES,
    PREP_KEYS,
    YS,
    ConditionalTable,
    success_probability,
    triples,
    winning_output,
)

MAX_ALPHABET = 6

# Winning bit per prepared input and setting, indexed [prep_index][y-1].
_WIN = tuple(tuple(winning_output(x, a, y) for y in YS) for x, a in PREP_KEYS)
_IS_EVEN = tuple(key in EVEN_PARITY for key in PREP_KEYS)


@dataclass(frozen=True)
class ClassicalStrategy:
    d: int
    encoder: Mapping[tuple[int, int], int]
    decoder: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("alphabet size must be positive")
        if set(self.encoder) != set(PREP_KEYS):
            raise ValueError("encoder must be defined on all six (x, a) inputs")
        if any(m not in range(1, self.d + 1) for m in self.encoder.values()):
            raise ValueError("encoder emits a message outside {1..d}")
        expected = {(m, y) for m in range(1, self.d + 1) for y in YS}
        if set(self.decoder) != expected:
            raise ValueError("decoder must be defined on every (message, y) pair")
        if any(b not in (0, 1) for b in self.decoder.values()):
            raise ValueError("decoder outputs must be bits")
        object.__setattr__(self, "encoder", dict(self.encoder))
        object.__setattr__(self, "decoder", dict(self.decoder))

    def output(self, x: int, a: int, y: int) -> int:
        return self.decoder[(self.encoder[(x, a)], y)]


@dataclass(frozen=True)
class OracleResult:
    d: int
    max_success: Fraction
    argmax: list[ClassicalStrategy] = field(repr=False)
    strategies_searched: int
    parity_oblivious_encoders: int


def _even_flags(even_set: frozenset) -> tuple[bool, ...]:
    if len(even_set) != 3 or not even_set <= set(PREP_KEYS):
        raise ValueError("even class must be three of the six (x, a) inputs")
    return tuple(key in even_set for key in PREP_KEYS)


def _balanced(messages: tuple[int, ...], d: int, is_even: tuple[bool, ...] = _IS_EVEN) -> bool:
    balance = [0] * (d + 1)
    for m, even in zip(messages, is_even):
        balance[m] += 1 if even else -1
    return not any(balance)


def is_parity_oblivious(s: ClassicalStrategy, even_set: frozenset = EVEN_PARITY) -> bool:
    """Every message is sent by equally many even- and odd-class inputs."""
    return _balanced(tuple(s.encoder[k] for k in PREP_KEYS), s.d, _even_flags(even_set))


def strategy_success(s: ClassicalStrategy) -> Fraction:
    """Exact success probability: winning triples over 18."""
    wins = sum(s.output(x, a, y) == winning_output(x, a, y) for x, a, y in triples())
    return Fraction(wins, NUM_TRIPLES)


def deterministic_table(s: ClassicalStrategy) -> ConditionalTable:
    """Exact ``p(b=0|x,a,y)`` table (entries 0 or 1 as Fractions)."""
    return ConditionalTable.from_function(
        lambda x, a, y: Fraction(1 - s.output(x, a, y)), exact=True
    )


def _greedy_decoder(messages: tuple[int, ...], d: int) -> tuple[dict[tuple[int, int], int], int]:
    # The objective is a sum over independent (message, y) cells, so choosing the
    # majority winning bit in each cell is globally optimal for a fixed encoder.
    decoder: dict[tuple[int, int], int] = {}
    wins = 0
    for m in range(1, d + 1):
        senders = [i for i, mi in enumerate(messages) if mi == m]
        for j, y in enumerate(YS):
            ones = sum(_WIN[i][j] for i in senders)
            zeros = len(senders) - ones
            bit = 1 if ones > zeros else 0
            decoder[(m, y)] = bit
            wins += max(ones, zeros)
    return decoder, wins


def _check_alphabet(d: int) -> None:
    if not 1 <= d <= MAX_ALPHABET:
        raise ValueError(f"alphabet size must be in [1, {MAX_ALPHABET}], got {d!r}")


def enumerate_max(d: int, even_set: frozenset = EVEN_PARITY) -> OracleResult:
    """Best parity-oblivious deterministic strategy over a ``d``-letter alphabet.

    Searches all ``d**6`` encoders and pairs each parity-oblivious one with its
    greedy (cellwise optimal) decoder.  ``even_set`` selects the parity split.
    """
    _check_alphabet(d)
    is_even = _even_flags(even_set)
    best = -1
    argmax: list[ClassicalStrategy] = []
    n_oblivious = 0
    searched = 0
    for messages in itertools.product(range(1, d + 1), repeat=len(PREP_KEYS)):
        searched += 1
        if not _balanced(messages, d, is_even):
            continue
        n_oblivious += 1
        decoder, wins = _greedy_decoder(messages, d)
        if wins < best:
            continue
        strategy = ClassicalStrategy(d, dict(zip(PREP_KEYS, messages)), decoder)
        if wins > best:
            best, argmax = wins, [strategy]
        else:
            argmax.append(strategy)
    return OracleResult(d, Fraction(best, NUM_TRIPLES), argmax, searched, n_oblivious)


def enumerate_max_bruteforce(d: int) -> Fraction:
    """Same maximum as :func:`enumerate_max`, searching every decoder too.

    Only meant as a cross-check of the greedy decoder lemma for small ``d``.
    """
    _check_alphabet(d)
    cells = [(m, y) for m in range(1, d + 1) for y in YS]
    best = 0
    for messages in itertools.product(range(1, d + 1), repeat=len(PREP_KEYS)):
        if not _balanced(messages, d):
            continue
        for bits in itertools.product((0, 1), repeat=len(cells)):
            decoder = dict(zip(cells, bits))
            wins = sum(
                decoder[(m, y)] == _WIN[i][j]
                for i, m in enumerate(messages)
                for j, y in enumerate(YS)
            )
            best = max(best, wins)
    return Fraction(best, NUM_TRIPLES)


def paper_trit_strategy() -> ClassicalStrategy:
    """The textbook trit protocol scoring 13/18.

    Inputs {10, 31}, {11, 21} and {20, 30} are sent as trits 1, 2, 3.  The
    decoder outputs (1, 0, 0), (0, 1, 1) and (0, 1, 0) for ``y = 1, 2, 3``.
    """
    encoder = {(1, 0): 1, (3, 1): 1, (1, 1): 2, (2, 1): 2, (2, 0): 3, (3, 0): 3}
    rows = {1: (1, 0, 0), 2: (0, 1, 1), 3: (0, 1, 0)}
    decoder = {(m, y): rows[m][y - 1] for m in rows for y in YS}
    return ClassicalStrategy(3, encoder, decoder)


def constant_strategy(bit: int = 0) -> ClassicalStrategy:
    encoder = {k: 1 for k in PREP_KEYS}
    return ClassicalStrategy(1, encoder, {(1, y): bit for y in YS})


def table_success(s: ClassicalStrategy) -> Fraction:
    """Success via the generic game functional on the deterministic table."""
    return success_probability(deterministic_table(s))
