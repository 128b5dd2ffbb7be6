"""Exact 2x2 Hermitian algebra for single-qubit states, effects and Kraus maps.

Everything here works on plain ``numpy`` 2x2 complex arrays.  The small value
types (:class:`QubitState`, :class:`EffectPair`, :class:`KrausPair`) validate
their invariants once on construction and are immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

ATOL = 1e-12
PSD_ATOL = 1e-9
HERMITIAN_ATOL = 1e-10

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)

for _m in (I2, SX, SY, SZ):
    _m.setflags(write=False)


def _frozen(m: np.ndarray) -> np.ndarray:
    out = np.array(m, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2x2 complex array."""
    arr = np.asarray(m, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def as_vector(r) -> np.ndarray:
    vec = np.asarray(r, dtype=float)
    if vec.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector has non-finite entries")
    return vec


def pauli_dot(n) -> np.ndarray:
    """Return ``n . sigma`` for a real 3-vector ``n``."""
    n = as_vector(n)
    return n[0] * SX + n[1] * SY + n[2] * SZ


def is_hermitian(m, atol: float = HERMITIAN_ATOL) -> bool:
    m = as_matrix(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol)


def hermitian_eigenvalues(m, atol: float = HERMITIAN_ATOL) -> tuple[float, float]:
    """Eigenvalues of a 2x2 Hermitian matrix in ascending order.

    Uses the closed form ``(tr -+ sqrt(tr^2 - 4 det)) / 2``, written as
    ``tr/2 -+ sqrt(((a - d)/2)^2 + |b|^2)`` so the discriminant can never go
    negative through cancellation.

    Raises
    ------
    ValueError
        If ``m`` is not Hermitian within ``atol``.
    """
    m = as_matrix(m)
    if not is_hermitian(m, atol):
        raise ValueError("matrix is not Hermitian")
    a = m[0, 0].real
    d = m[1, 1].real
    b = 0.5 * (m[0, 1] + np.conj(m[1, 0]))
    half_tr = 0.5 * (a + d)
    radius = float(np.hypot(0.5 * (a - d), abs(b)))
    return half_tr - radius, half_tr + radius


def min_eigenvalue(m) -> float:
    return hermitian_eigenvalues(m)[0]


@dataclass(frozen=True)
class QubitState:
    """A single-qubit density matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_matrix(self.matrix)
        if not is_hermitian(m, ATOL):
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > ATOL:
            raise ValueError(f"density matrix has trace {np.trace(m).real!r}, expected 1")
        if hermitian_eigenvalues(m)[0] < -ATOL:
            raise ValueError("density matrix is not positive semidefinite")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def bloch(self) -> np.ndarray:
        return state_to_bloch(self)

    def is_pure(self, atol: float = HERMITIAN_ATOL) -> bool:
        return abs(hermitian_eigenvalues(self.matrix)[1] - 1.0) <= atol


@dataclass(frozen=True)
class EffectPair:
    """Two-outcome POVM ``(E_plus, E_minus)``; ``E_plus`` is outcome ``b = 0``."""

    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self) -> None:
        p, q = as_matrix(self.plus), as_matrix(self.minus)
        for e in (p, q):
            if hermitian_eigenvalues(e)[0] < -ATOL:
                raise ValueError("effect is not positive semidefinite")
        if np.max(np.abs(p + q - I2)) > ATOL:
            raise ValueError("effects do not sum to the identity")
        object.__setattr__(self, "plus", _frozen(p))
        object.__setattr__(self, "minus", _frozen(q))

    def __getitem__(self, b: int) -> np.ndarray:
        return (self.plus, self.minus)[b]


@dataclass(frozen=True)
class KrausPair:
    """Kraus operators ``K_pm = alpha I pm beta (n . sigma)`` of an unsharp measurement."""

    plus: np.ndarray
    minus: np.ndarray
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        p, q = as_matrix(self.plus), as_matrix(self.minus)
        completeness = p.conj().T @ p + q.conj().T @ q
        if np.max(np.abs(completeness - I2)) > ATOL:
            raise ValueError("Kraus operators are not complete")
        object.__setattr__(self, "plus", _frozen(p))
        object.__setattr__(self, "minus", _frozen(q))

    @property
    def eta(self) -> float:
        return 4.0 * self.alpha * self.beta

    def __iter__(self):
        return iter((self.plus, self.minus))


def bloch_to_state(r) -> QubitState:
    """Density matrix ``(I + r . sigma) / 2``.

    Raises
    ------
    ValueError
        If ``|r| > 1 + 1e-12``.
    """
    r = as_vector(r)
    if np.linalg.norm(r) > 1.0 + ATOL:
        raise ValueError(f"unphysical Bloch vector with norm {np.linalg.norm(r)!r}")
    return QubitState(0.5 * (I2 + pauli_dot(r)))


def state_to_bloch(rho: QubitState | np.ndarray) -> np.ndarray:
    m = rho.matrix if isinstance(rho, QubitState) else as_matrix(rho)
    return np.array([np.trace(m @ p).real for p in PAULIS])


def _check_measurement(direction, eta: float) -> np.ndarray:
    n = as_vector(direction)
    if abs(np.linalg.norm(n) - 1.0) > ATOL:
        raise ValueError("measurement direction must be a unit vector")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"unsharpness must lie in [0, 1], got {eta!r}")
    return n


def make_effects(direction, eta: float) -> EffectPair:
    """Unsharp POVM ``E_pm = (I pm eta n . sigma) / 2``."""
    n = _check_measurement(direction, eta)
    B = pauli_dot(n)
    return EffectPair(0.5 * (I2 + eta * B), 0.5 * (I2 - eta * B))


def kraus_coefficients(eta: float) -> tuple[float, float]:
    """``(alpha, beta)`` with ``alpha^2 + beta^2 = 1/2`` and ``4 alpha beta = eta``."""
    lo = np.sqrt((1.0 - eta) / 2.0)
    hi = np.sqrt((1.0 + eta) / 2.0)
    return 0.5 * (lo + hi), 0.5 * (hi - lo)


def make_kraus(direction, eta: float) -> KrausPair:
    """Square-root Kraus pair of the unsharp measurement (unitary fixed to I)."""
    n = _check_measurement(direction, eta)
    alpha, beta = kraus_coefficients(eta)
    B = pauli_dot(n)
    return KrausPair(alpha * I2 + beta * B, alpha * I2 - beta * B, float(alpha), float(beta))


def apply_kraus_average(rho: QubitState, pairs: Sequence[KrausPair]) -> QubitState:
    """Non-selective post-measurement state averaged over uniformly chosen settings.

    ``rho -> (1/len(pairs)) sum_y sum_b K_{b|y} rho K_{b|y}^dagger``.
    """
    m = rho.matrix
    acc = np.zeros((2, 2), dtype=complex)
    for pair in pairs:
        for k in pair:
            acc += k @ m @ k.conj().T
    acc /= len(pairs)
    # enforce exact Hermiticity lost to rounding
    return QubitState(0.5 * (acc + acc.conj().T))


def fidelity_pure_target(target: QubitState, rho: QubitState) -> float:
    """Fidelity ``Tr[target rho]`` of ``rho`` with a pure target state."""
    if not target.is_pure():
        raise ValueError("fidelity_pure_target requires a pure target state")
    return float(np.trace(target.matrix @ rho.matrix).real)
