"""Turning observed success probabilities into statements about Bob's unsharpness.

All relations here invert the published closed forms for the optimal pair
``(Omega_B, Omega_C)``.  They are algebraic and do not depend on simulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

CLASSICAL_BOUND = 13 / 18
CLASSICAL_BOUND_EXACT = Fraction(13, 18)
DEFAULT_CURVE_TOL = 1e-6
_DOMAIN_SLACK = 1e-12

# Linearization of the Charlie threshold around the lower window edge.
LINEAR_ETA_C0 = 0.803
LINEAR_ETA_C_SLOPE = 0.577


def _check_prob(value: float, name: str) -> float:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)


def _check_eta(eta: float, name: str = "eta_B") -> float:
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {eta!r}")
    return float(eta)


def _sqrt_nonneg(x: float) -> float:
    if x < -_DOMAIN_SLACK:
        raise ValueError(f"negative radicand {x!r}")
    return float(np.sqrt(max(x, 0.0)))


@dataclass(frozen=True)
class ObservedPair:
    a_b: float
    a_c: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_b", _check_prob(self.a_b, "A_B"))
        object.__setattr__(self, "a_c", _check_prob(self.a_c, "A_C"))


@dataclass(frozen=True)
class CertificationVerdict:
    on_curve: bool
    certified_eta_b: Optional[float]
    eta_b_interval: Optional[tuple[float, float]]
    both_quantum: bool
    reason: str = ""

    def __post_init__(self) -> None:
        if self.on_curve != (self.certified_eta_b is not None):
            raise ValueError("certified_eta_b must be present exactly when on_curve")
        if self.eta_b_interval is not None:
            lo, hi = self.eta_b_interval
            if not 0.0 <= lo <= hi <= 1.0:
                raise ValueError(f"invalid interval {self.eta_b_interval!r}")

    def as_dict(self) -> dict:
        return {
            "on_curve": self.on_curve,
            "certified_eta_B": self.certified_eta_b,
            "eta_B_interval": list(self.eta_b_interval) if self.eta_b_interval else None,
            "both_quantum": self.both_quantum,
            "reason": self.reason,
        }


def tradeoff_curve(omega_b: float) -> float:
    """``Omega_C = 1/2 + (1 + sqrt(4 - 9 (2 Omega_B - 1)^2)) / 9`` on ``[1/2, 5/6]``."""
    if not 0.5 - _DOMAIN_SLACK <= omega_b <= 5 / 6 + _DOMAIN_SLACK:
        raise ValueError(f"Omega_B must lie in [1/2, 5/6], got {omega_b!r}")
    return 0.5 + (1.0 + _sqrt_nonneg(4.0 - 9.0 * (2.0 * omega_b - 1.0) ** 2)) / 9.0


def eta_min_from_bob(a_b: float) -> float:
    """Smallest unsharpness compatible with Bob's success ``A_B``: ``3 (A_B - 1/2)``."""
    if not 0.5 - _DOMAIN_SLACK <= a_b <= 5 / 6 + _DOMAIN_SLACK:
        raise ValueError(f"A_B must lie in [1/2, 5/6], got {a_b!r}")
    return min(1.0, max(0.0, 3.0 * (a_b - 0.5)))


def _charlie_inner(a_c: float) -> float:
    return 0.5 * (4.5 * (2.0 * a_c - 1.0) - 1.0)


def eta_max_from_charlie(a_c: float) -> float:
    """Largest unsharpness of Bob that still lets Charlie reach ``A_C``.

    ``sqrt(1 - u^2)`` with ``u = ((9/2)(2 A_C - 1) - 1) / 2``, defined for
    ``u in [-1, 1]``, i.e. ``A_C in [7/18, 5/6]``.
    """
    u = _charlie_inner(a_c)
    if not -1.0 - _DOMAIN_SLACK <= u <= 1.0 + _DOMAIN_SLACK:
        raise ValueError(f"A_C = {a_c!r} is outside [7/18, 5/6]")
    return _sqrt_nonneg(1.0 - u * u)


def certify(pair: ObservedPair, tol: float = DEFAULT_CURVE_TOL) -> CertificationVerdict:
    """Certify Bob's unsharpness from an observed pair of success probabilities.

    On the trade-off curve the value ``3 (A_B - 1/2)`` is certified exactly.
    Off the curve an interval is reported when both observations reach the
    classical bound (inclusive, within ``tol``).  ``both_quantum`` requires
    both to exceed it strictly.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a_b, a_c = pair.a_b, pair.a_c
    both_quantum = a_b > CLASSICAL_BOUND and a_c > CLASSICAL_BOUND
    bob_in_range = 0.5 <= a_b <= 5 / 6 + _DOMAIN_SLACK

    if bob_in_range and abs(a_c - tradeoff_curve(a_b)) <= tol:
        return CertificationVerdict(True, eta_min_from_bob(a_b), None, both_quantum,
                                    "on trade-off curve")

    failing = [name for name, v in (("A_B", a_b), ("A_C", a_c)) if v < CLASSICAL_BOUND - tol]
    if failing:
        return CertificationVerdict(False, None, None, both_quantum,
                                    f"{' and '.join(failing)} below classical bound")
    if not bob_in_range:
        return CertificationVerdict(False, None, None, both_quantum,
                                    "A_B above the quantum optimum 5/6")
    if a_c > 5 / 6 + _DOMAIN_SLACK:
        return CertificationVerdict(False, None, None, both_quantum,
                                    "A_C above the quantum optimum 5/6")
    lo, hi = eta_min_from_bob(a_b), eta_max_from_charlie(a_c)
    if lo > hi:
        return CertificationVerdict(False, None, None, both_quantum,
                                    "empty interval: pair is not quantum realizable")
    return CertificationVerdict(False, None, (lo, hi), both_quantum, "off curve")


def eta_c_min(eta_b: float, omega_c: float = CLASSICAL_BOUND) -> float:
    """Charlie's unsharpness needed to reach ``omega_c`` after Bob measured with ``eta_b``."""
    root = np.sqrt(1.0 - _check_eta(eta_b) ** 2)
    return 4.5 * (2.0 * omega_c - 1.0) / (1.0 + 2.0 * root)


def required_eta_d(eta_b: float, eta_c: float, omega_d: float = CLASSICAL_BOUND) -> float:
    """Debbie's unsharpness needed to reach ``omega_d`` after Bob and Charlie."""
    rb = np.sqrt(1.0 - _check_eta(eta_b) ** 2)
    rc = np.sqrt(1.0 - _check_eta(eta_c, "eta_C") ** 2)
    return 13.5 * (2.0 * omega_d - 1.0) / ((1.0 + 2.0 * rb) * (1.0 + 2.0 * rc))


def eta_c_min_exact(eta_b: float, omega_c: float = CLASSICAL_BOUND) -> float:
    """Charlie's threshold on the trine configuration: ``3 (omega_c - 1/2) / gamma_B``."""
    return 3.0 * (omega_c - 0.5) / _gamma(eta_b)


def required_eta_d_exact(eta_b: float, eta_c: float, omega_d: float = CLASSICAL_BOUND) -> float:
    """Debbie's threshold on the trine configuration: ``3 (omega_d - 1/2) / (gamma_B gamma_C)``."""
    return 3.0 * (omega_d - 0.5) / (_gamma(eta_b) * _gamma(eta_c, "eta_C"))


def _gamma(eta: float, name: str = "eta_B") -> float:
    return 0.5 * (1.0 + np.sqrt(1.0 - _check_eta(eta, name) ** 2))


def is_feasible(eta: float) -> bool:
    return eta <= 1.0


def window() -> tuple[float, float]:
    """Range of ``eta_B`` letting both Bob and Charlie beat the classical bound."""
    return eta_min_from_bob(CLASSICAL_BOUND), eta_max_from_charlie(CLASSICAL_BOUND)


@dataclass(frozen=True)
class ZetaRow:
    zeta: float
    eta_b: float
    eta_c_min: float
    eta_c_linear: float
    required_eta_d: float
    required_eta_d_sharp_c: float
    eta_c_min_exact: float
    required_eta_d_exact: float

    @property
    def feasible(self) -> bool:
        return is_feasible(self.required_eta_d)


def zeta_sweep(steps: int = 201) -> list[ZetaRow]:
    """Third-observer requirement along ``eta_B = 2/3 + zeta`` across the window."""
    if steps < 2:
        raise ValueError("steps must be at least 2")
    lo, hi = window()
    rows = []
    for eta_b in np.linspace(lo, hi, steps):
        zeta = eta_b - lo
        ec = min(eta_c_min(eta_b), 1.0)
        ecx = min(eta_c_min_exact(eta_b), 1.0)
        rows.append(ZetaRow(float(zeta), float(eta_b), float(ec),
                            float(LINEAR_ETA_C0 + LINEAR_ETA_C_SLOPE * zeta),
                            float(required_eta_d(eta_b, ec)),
                            float(required_eta_d(eta_b, 1.0)),
                            float(ecx),
                            float(required_eta_d_exact(eta_b, ecx))))
    return rows
