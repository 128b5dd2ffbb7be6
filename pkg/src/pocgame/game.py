"""The parity-oblivious communication game: inputs, winning rule and success functional.

Alice holds ``x in {1, 2, 3}`` and a bit ``a``; the receiver holds ``y in {1, 2, 3}``
and must output ``b = delta(x, y) XOR a``.  Every one of the 18 triples
``(x, a, y)`` carries weight 1/18.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import numpy as np

from .qubit import EffectPair, QubitState

XS = (1, 2, 3)
AS = (0, 1)
YS = (1, 2, 3)
NUM_TRIPLES = 18

EVEN = "even"
ODD = "odd"

# Even class taken from the explicit state equation rho_11 + rho_20 + rho_31 =
# rho_10 + rho_21 + rho_30, i.e. (x + a) even.  The classical bound 13/18 holds
# for this convention.
EVEN_PARITY: frozenset[tuple[int, int]] = frozenset({(1, 1), (2, 0), (3, 1)})
ODD_PARITY: frozenset[tuple[int, int]] = frozenset({(1, 0), (2, 1), (3, 0)})

# Alternative split {10, 20, 30} vs {11, 21, 31}, i.e. hiding the bit a.  The
# symmetric antipodal trine is oblivious only under this one; it is exposed
# so that property can be checked, not used as the default.
A_BIT_EVEN_PARITY: frozenset[tuple[int, int]] = frozenset({(1, 0), (2, 0), (3, 0)})

PREP_KEYS: tuple[tuple[int, int], ...] = tuple((x, a) for x in XS for a in AS)


def _check_input(x: int, a: int, y: int | None = None) -> None:
    if x not in XS:
        raise ValueError(f"x must be in {{1,2,3}}, got {x!r}")
    if a not in AS:
        raise ValueError(f"a must be a bit, got {a!r}")
    if y is not None and y not in YS:
        raise ValueError(f"y must be in {{1,2,3}}, got {y!r}")


def triples() -> Iterator[tuple[int, int, int]]:
    """All 18 ``(x, a, y)`` inputs in lexicographic order."""
    for x in XS:
        for a in AS:
            for y in YS:
                yield x, a, y


def winning_output(x: int, a: int, y: int) -> int:
    """The bit ``b = delta(x, y) XOR a`` that wins on input ``(x, a, y)``."""
    _check_input(x, a, y)
    return int(x == y) ^ a


def parity_class(x: int, a: int) -> str:
    """``"even"`` iff ``x + a`` is even."""
    _check_input(x, a)
    return EVEN if (x + a) % 2 == 0 else ODD


@dataclass(frozen=True)
class ConditionalTable:
    """Probabilities ``p(b = 0 | x, a, y)`` stored in an array indexed ``[x-1, a, y-1]``.

    Object arrays of :class:`fractions.Fraction` are accepted so deterministic
    tables can be scored exactly.
    """

    p0: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.p0)
        if arr.shape != (3, 2, 3):
            raise ValueError(f"table must have shape (3, 2, 3), got {arr.shape}")
        for v in arr.flat:
            if not 0 <= v <= 1:
                raise ValueError(f"probability {v!r} outside [0, 1]")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "p0", arr)

    def prob(self, b: int, x: int, a: int, y: int):
        p = self.p0[x - 1, a, y - 1]
        return p if b == 0 else 1 - p

    @classmethod
    def uniform(cls) -> "ConditionalTable":
        return cls(np.full((3, 2, 3), 0.5))

    @classmethod
    def from_function(cls, fn, exact: bool = False) -> "ConditionalTable":
        """Build from ``fn(x, a, y) -> p(b=0 | x, a, y)``."""
        arr = np.empty((3, 2, 3), dtype=object if exact else float)
        for x, a, y in triples():
            arr[x - 1, a, y - 1] = fn(x, a, y)
        return cls(arr)


def success_probability(table: ConditionalTable):
    """Average winning probability ``(1/18) sum p(b = win | x, a, y)``.

    Returns a :class:`fractions.Fraction` when the table holds exact rationals.
    """
    total = sum(table.prob(winning_output(x, a, y), x, a, y) for x, a, y in triples())
    if isinstance(total, (int, Fraction)):
        return Fraction(total) / NUM_TRIPLES
    return float(total) / NUM_TRIPLES


@dataclass(frozen=True)
class PreparationSet:
    """Six qubit states ``rho[(x, a)]``."""

    states: Mapping[tuple[int, int], QubitState]

    def __post_init__(self) -> None:
        missing = set(PREP_KEYS) - set(self.states)
        if missing:
            raise ValueError(f"missing preparations for {sorted(missing)}")
        for key, st in self.states.items():
            if not isinstance(st, QubitState):
                raise TypeError(f"preparation {key} is not a QubitState")
        object.__setattr__(self, "states", {k: self.states[k] for k in PREP_KEYS})

    def __getitem__(self, key: tuple[int, int]) -> QubitState:
        return self.states[key]

    def bloch(self, x: int, a: int) -> np.ndarray:
        return self.states[(x, a)].bloch

    def map(self, fn) -> "PreparationSet":
        return PreparationSet({k: fn(v) for k, v in self.states.items()})


def parity_sums(prep: PreparationSet, even_set: frozenset = EVEN_PARITY
                ) -> tuple[np.ndarray, np.ndarray]:
    if len(even_set) != 3 or not even_set <= set(PREP_KEYS):
        raise ValueError("even class must be three of the six (x, a) inputs")
    even = sum(prep[k].matrix for k in PREP_KEYS if k in even_set)
    odd = sum(prep[k].matrix for k in PREP_KEYS if k not in even_set)
    return even, odd


def check_parity_oblivious(prep: PreparationSet, tol: float = 1e-12,
                           even_set: frozenset = EVEN_PARITY) -> bool:
    """True iff the even- and odd-class state sums agree entrywise within ``tol``."""
    even, odd = parity_sums(prep, even_set)
    return bool(np.max(np.abs(even - odd)) <= tol)


def born_table(prep: PreparationSet, measurements: Sequence[EffectPair]) -> ConditionalTable:
    """``p(b = 0 | x, a, y) = Tr[rho_xa E_{0|y}]``."""
    if len(measurements) != 3:
        raise ValueError("expected one effect pair per setting y")

    def p0(x: int, a: int, y: int) -> float:
        val = np.trace(prep[(x, a)].matrix @ measurements[y - 1].plus).real
        # rounding can leave Born values a few ulps outside [0, 1]
        return float(min(1.0, max(0.0, val)))

    return ConditionalTable.from_function(p0)
