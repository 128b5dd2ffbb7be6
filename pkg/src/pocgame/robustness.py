"""Robustness of the trine preparations and of Bob's and Charlie's measurements.

The fidelity of an unknown device with its ideal counterpart is lower-bounded
by an affine function of the observed success probability.  The bound comes
from operator inequalities ``K >= s T + t I``.  Here ``K`` is the ideal object
passed through a dephasing channel.  ``T`` is either ``W_xa`` (built from
the measurements, for preparations) or ``Z_yb`` (built from the states, for
measurements).  The largest admissible ``t`` for one index is
``lambda_min(K - s T)``.

Three scenarios are supported:

``prep``
    Alice's preparations, with Bob's measurement family parameterized by ``theta``.
``meas_bob``
    Bob's unsharp measurements, with Alice's states parameterized by ``theta``.
``meas_charlie``
    Charlie's sharp measurements, against the states Bob hands on.  Those are
    the ``theta`` states shrunk by ``gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .game import PREP_KEYS, XS, YS, PreparationSet
from .qubit import (
    QubitState,
    as_matrix,
    bloch_to_state,
    hermitian_eigenvalues,
    make_effects,
    pauli_dot,
)
from .quantum import (
    IDEAL_THETA,
    ideal_directions,
    omega_b,
    omega_c,
    shrink_factor,
    trine_preparations,
    trine_vectors,
)

SCENARIOS = ("prep", "meas_bob", "meas_charlie")
LOW = "low"
HIGH = "high"
THETA_SPLIT = np.pi / 3
THETA_MAX = np.pi / 2
DEFAULT_GRID_N = 1024
SQRT3 = np.sqrt(3.0)

_GAMMA_AXIS = {
    LOW: np.array([-0.5, 0.0, SQRT3 / 2]),
    HIGH: np.array([-0.5, 0.0, -SQRT3 / 2]),
}


def _check_scenario(scenario: str) -> str:
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")
    return scenario


def _check_theta(theta: float) -> float:
    if not 0.0 <= theta <= THETA_MAX + 1e-15:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta!r}")
    return float(theta)


def _check_eta(eta: float) -> float:
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"eta_B must lie in (0, 1], got {eta!r}")
    return float(eta)


def interval_of(theta: float) -> str:
    return LOW if _check_theta(theta) <= THETA_SPLIT else HIGH


def _resolve_interval(theta: float, interval: Optional[str]) -> str:
    if interval is None:
        return interval_of(theta)
    if interval not in (LOW, HIGH):
        raise ValueError(f"interval must be {LOW!r} or {HIGH!r}, got {interval!r}")
    return interval


def dephasing_strength(theta: float, s: float, interval: Optional[str] = None) -> float:
    """``c = min(1, (s/6) sin theta)`` on the low interval, ``min(1, (s/6) cos theta)`` above it."""
    interval = _resolve_interval(_check_theta(theta), interval)
    trig = np.sin(theta) if interval == LOW else np.cos(theta)
    return float(min(1.0, max(0.0, s / 6.0 * trig)))


@dataclass(frozen=True)
class DephasingChannel:
    """``rho -> ((1+c)/2) rho + ((1-c)/2) G rho G`` with ``G = g . sigma``.

    ``g = (-1/2, 0, +-sqrt(3)/2)``, the sign fixed by which side of ``pi/3``
    ``theta`` lies on.  ``G`` is Hermitian and unitary, so the channel is
    self-dual and unital.
    """

    theta: float
    c: float
    interval: str = field(default="")
    gamma_op: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        _check_theta(self.theta)
        if not 0.0 <= self.c <= 1.0:
            raise ValueError(f"dephasing strength must lie in [0, 1], got {self.c!r}")
        interval = _resolve_interval(self.theta, self.interval or None)
        object.__setattr__(self, "interval", interval)
        g = pauli_dot(_GAMMA_AXIS[interval])
        g.setflags(write=False)
        object.__setattr__(self, "gamma_op", g)

    @classmethod
    def for_theta(cls, theta: float, s: float, interval: Optional[str] = None) -> "DephasingChannel":
        interval = _resolve_interval(_check_theta(theta), interval)
        return cls(theta, dephasing_strength(theta, s, interval), interval)

    @property
    def axis(self) -> np.ndarray:
        return _GAMMA_AXIS[self.interval]

    def apply(self, m) -> np.ndarray:
        """Apply to any 2x2 operator (states and effects alike)."""
        m = as_matrix(m)
        g = self.gamma_op
        return 0.5 * (1.0 + self.c) * m + 0.5 * (1.0 - self.c) * (g @ m @ g)

    def apply_bloch(self, r) -> np.ndarray:
        """Bloch form ``r -> c r + (1 - c)(g . r) g``."""
        r = np.asarray(r, dtype=float)
        g = self.axis
        return self.c * r + (1.0 - self.c) * (g @ r) * g


def dephase(channel: DephasingChannel, rho: QubitState) -> QubitState:
    out = channel.apply(rho.matrix)
    return QubitState(0.5 * (out + out.conj().T))


def measurement_directions(theta: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Bob's axes ``(-1, 0, 0)``, ``(cos t, 0, -sin t)``, ``(cos t, 0, sin t)``."""
    c, s = np.cos(_check_theta(theta)), np.sin(theta)
    return (np.array([-1.0, 0.0, 0.0]), np.array([c, 0.0, -s]), np.array([c, 0.0, s]))


def _sign(x: int, a: int, y: int) -> float:
    return -1.0 if (int(x == y) ^ a) else 1.0


def w_operator(x: int, a: int, directions, eta_b: float) -> np.ndarray:
    """``W_xa = (1/36) sum_y (-1)^(delta(x,y) XOR a) eta_B (b_y . sigma)``."""
    out = np.zeros((2, 2), dtype=complex)
    for y, b in zip(YS, directions):
        out += _sign(x, a, y) * eta_b * pauli_dot(b)
    return out / 36.0


def z_operator(y: int, b: int, prep: PreparationSet) -> np.ndarray:
    """``Z_yb = (1/18) sum of rho_xa over the inputs whose winning bit at y is b``."""
    out = np.zeros((2, 2), dtype=complex)
    for x, a in PREP_KEYS:
        if (int(x == y) ^ a) == b:
            out += prep[(x, a)].matrix
    return out / 18.0


def min_eigen_t(k, target, s: float) -> float:
    """Largest ``t`` with ``K - s T - t I >= 0``, i.e. ``lambda_min(K - s T)``."""
    return hermitian_eigenvalues(as_matrix(k) - s * as_matrix(target))[0]


def gamma_states(theta: float, gamma: float) -> PreparationSet:
    """Trine-family states with Bloch vectors scaled by ``gamma``."""
    return PreparationSet({k: bloch_to_state(gamma * r) for k, r in trine_vectors(theta).items()})


def default_s(scenario: str, eta_b: float) -> float:
    """The slope choice that makes each bound tight at its optimum."""
    _check_scenario(scenario)
    eta_b = _check_eta(eta_b)
    if scenario == "prep":
        return 9.0 / eta_b
    if scenario == "meas_bob":
        return 9.0
    return 54.0 / (7.0 * shrink_factor(eta_b) - 1.0)


def paper_t(scenario: str, eta_b: float) -> float:
    """Published intercepts: ``1/2``, ``1/4 - eta_B/2`` and ``(9 - 6g)/(2 - 14g)``."""
    _check_scenario(scenario)
    eta_b = _check_eta(eta_b)
    if scenario == "prep":
        return 0.5
    if scenario == "meas_bob":
        return 0.25 - eta_b / 2.0
    g = shrink_factor(eta_b)
    return (9.0 - 6.0 * g) / (2.0 - 14.0 * g)


@dataclass(frozen=True)
class IndexedOperators:
    index: tuple[int, int]
    branch: int
    k: np.ndarray
    target: np.ndarray


def scenario_operators(scenario: str, theta: float, eta_b: float, s: float,
                       interval: Optional[str] = None,
                       c: Optional[float] = None) -> list[IndexedOperators]:
    """The six ``(K, T)`` pairs of a scenario at angle ``theta``.

    ``K`` is the dephased ideal object (trine states or effects at ``pi/3``).
    ``T`` depends on ``theta``.  ``c`` defaults to the rule in
    :func:`dephasing_strength`.
    """
    _check_scenario(scenario)
    eta_b = _check_eta(eta_b)
    interval = _resolve_interval(_check_theta(theta), interval)
    if c is None:
        c = dephasing_strength(theta, s, interval)
    channel = DephasingChannel(theta, c, interval)
    out = []
    if scenario == "prep":
        ideal = trine_preparations(IDEAL_THETA)
        dirs = measurement_directions(theta)
        for x, a in PREP_KEYS:
            out.append(IndexedOperators((x, a), x, channel.apply(ideal[(x, a)].matrix),
                                        w_operator(x, a, dirs, eta_b)))
        return out
    if scenario == "meas_bob":
        sharpness, states = eta_b, trine_preparations(theta)
    else:
        sharpness, states = 1.0, gamma_states(theta, shrink_factor(eta_b))
    for y, axis in zip(YS, ideal_directions(IDEAL_THETA)):
        effects = make_effects(axis, sharpness)
        for b in (0, 1):
            out.append(IndexedOperators((y, b), y, channel.apply(effects[b]),
                                        z_operator(y, b, states)))
    return out


def _prep_radicands(theta, s, eta, c):
    se = s * eta
    cos, sin = np.cos(theta), np.sin(theta)
    x1 = (81 + 243 * c**2 - 9 * se - 27 * c * se + 3 * se**2 - 18 * se * cos
          - 54 * c * se * cos + 4 * se**2 * cos + 2 * se**2 * np.cos(2 * theta))
    x2 = 324 - 18 * se + 3 * se**2 - 2 * se**2 * np.cos(2 * theta) - 36 * SQRT3 * se * sin
    x3 = (81 + 243 * c**2 + 9 * se - 27 * c * se + se**2 - 18 * SQRT3 * se * sin
          - 18 * SQRT3 * c * se * sin + 4 * se**2 * sin**2)
    return x1, x2, x3


def _bob_radicands(theta, s, eta, c):
    cos, sin = np.cos(theta), np.sin(theta)
    y1 = (3 * s**2 - 9 * s * eta - 27 * c * s * eta + 81 * eta**2 + 243 * c**2 * eta**2
          + 4 * s**2 * cos - 18 * s * eta * cos - 54 * c * s * eta * cos
          + 2 * s**2 * np.cos(2 * theta))
    y2 = s**2 - 18 * s * eta + 324 * eta**2 - 36 * SQRT3 * s * eta * sin + 4 * s**2 * sin**2
    y3 = (s**2 + 9 * s * eta - 27 * c * s * eta + 81 * eta**2 + 243 * c**2 * eta**2
          - 18 * SQRT3 * s * eta * sin - 18 * SQRT3 * c * s * eta * sin + 4 * s**2 * sin**2)
    return y1, y2, y3


def _charlie_radicands(theta, s, g, c):
    cos, sin = np.cos(theta), np.sin(theta)
    sg = s * g
    z1 = (81 + 243 * c**2 - 9 * sg - 27 * c * sg + 3 * sg**2 - 18 * sg * cos
          - 54 * c * sg * cos + 4 * sg**2 * cos + 2 * sg**2 * np.cos(2 * theta))
    z2 = 324 - 18 * sg + sg**2 - 36 * SQRT3 * sg * sin + 4 * sg**2 * sin**2
    z3 = (81 + 243 * c**2 + 9 * sg - 27 * c * sg + sg**2 - 18 * SQRT3 * sg * sin
          - 18 * SQRT3 * c * sg * sin + 4 * sg**2 * sin**2)
    return z1, z2, z3


def closed_form_t_grid(scenario: str, thetas, s: float, eta_b: float, interval: str,
                       c=None) -> np.ndarray:
    """Vectorized :func:`closed_form_t` for all three branches, shape ``(n, 3)``."""
    _check_scenario(scenario)
    eta_b = _check_eta(eta_b)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if c is None:
        trig = np.sin(thetas) if interval == LOW else np.cos(thetas)
        c = np.clip(s / 6.0 * trig, 0.0, 1.0)
    if scenario == "prep":
        radicands, offset = _prep_radicands(thetas, s, eta_b, c), 18.0
    elif scenario == "meas_bob":
        radicands, offset = _bob_radicands(thetas, s, eta_b, c), 18.0 - 3.0 * s
    else:
        radicands = _charlie_radicands(thetas, s, shrink_factor(eta_b), c)
        offset = 18.0 - 3.0 * s
    order = (0, 1, 2) if interval == LOW else (0, 2, 1)
    # exact radicands are squares of real norms; clip rounding noise only
    roots = [np.sqrt(np.maximum(radicands[i], 0.0)) for i in order]
    return np.stack([(offset - r) / 36.0 for r in roots], axis=1)


def closed_form_t(scenario: str, branch: int, theta: float, s: float, eta_b: float,
                  c: Optional[float] = None, interval: Optional[str] = None) -> float:
    """Published closed form of ``t_branch`` (the smaller root of each ``min{...}``).

    On the high interval branches 2 and 3 swap their expressions.
    """
    if branch not in XS:
        raise ValueError(f"branch must be 1, 2 or 3, got {branch!r}")
    interval = _resolve_interval(_check_theta(theta), interval)
    if c is None:
        c = dephasing_strength(theta, s, interval)
    return float(closed_form_t_grid(scenario, [theta], s, eta_b, interval, c)[0, branch - 1])


def t_branches(scenario: str, theta: float, eta_b: float, s: float,
               interval: Optional[str] = None) -> tuple[float, float, float]:
    """Per-branch ``t_k`` from eigenvalues, averaged over the two indices of branch ``k``."""
    acc = {k: [] for k in XS}
    for op in scenario_operators(scenario, theta, eta_b, s, interval):
        acc[op.branch].append(min_eigen_t(op.k, op.target, s))
    return tuple(float(np.mean(acc[k])) for k in XS)  # type: ignore[return-value]


def t_of_theta(scenario: str, theta: float, eta_b: float, s: float,
               interval: Optional[str] = None) -> float:
    return float(np.mean(t_branches(scenario, theta, eta_b, s, interval)))


_INDEX_SIGNS = np.array([[_sign(x, a, y) for y in YS] for x, a in PREP_KEYS])
_INDEX_BRANCH = np.array([x for x, _ in PREP_KEYS])


def _bloch_lambda_min(scenario: str, thetas, eta_b: float, s: float, interval: str,
                      c=None) -> np.ndarray:
    """Vectorized ``lambda_min(K - s T)`` for all six indices, shape ``(len(thetas), 6)``.

    Every operator involved has the form ``u I + v . sigma`` and its smallest
    eigenvalue is ``u - |v|``; this is the Bloch-form twin of
    :func:`scenario_operators` plus :func:`min_eigen_t`.
    """
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    trig = np.sin(thetas) if interval == LOW else np.cos(thetas)
    if c is None:
        c = np.clip(s / 6.0 * trig, 0.0, 1.0)
    c = np.broadcast_to(np.asarray(c, dtype=float), thetas.shape)[:, None, None]
    g = _GAMMA_AXIS[interval]
    cos, sin = np.cos(thetas), np.sin(thetas)
    zeros = np.zeros_like(thetas)

    def dephased(v):
        # v has shape (6, 3); result (n, 6, 3)
        return c * v[None] + (1.0 - c) * (v @ g)[None, :, None] * g

    ideal = trine_vectors(IDEAL_THETA)
    if scenario == "prep":
        r = np.array([ideal[k] for k in PREP_KEYS])
        k_vec = 0.5 * dephased(r)
        dirs = np.stack([np.stack([-np.ones_like(thetas), zeros, zeros], -1),
                         np.stack([cos, zeros, -sin], -1),
                         np.stack([cos, zeros, sin], -1)], axis=1)  # (n, 3, 3)
        t_vec = eta_b / 36.0 * np.einsum("iy,nyj->nij", _INDEX_SIGNS, dirs)
        u = np.full(thetas.shape + (6,), 0.5)
    else:
        sharp = eta_b if scenario == "meas_bob" else 1.0
        scale = 1.0 if scenario == "meas_bob" else shrink_factor(eta_b)
        axes = ideal_directions(IDEAL_THETA)
        e = np.array([sign * sharp * axes[y - 1] for y in YS for sign in (1.0, -1.0)])
        k_vec = 0.5 * dephased(e)
        states = np.stack([np.stack([np.ones_like(thetas), zeros, zeros], -1),
                           np.stack([-cos, zeros, sin], -1),
                           np.stack([-cos, zeros, -sin], -1)], axis=1)  # r_x0, (n, 3, 3)
        # winning bit at (y, b) picks r_xa = (-1)^a r_x0 with delta(x,y) XOR a = b
        weights = np.array([[(-1.0) ** (int(x == y) ^ b) for x in XS]
                            for y in YS for b in (0, 1)])
        t_vec = scale / 36.0 * np.einsum("ix,nxj->nij", weights, states)
        u = np.full(thetas.shape + (6,), 0.5 - s / 12.0)
    return u - np.linalg.norm(k_vec - s * t_vec, axis=-1)


def t_grid(scenario: str, thetas, eta_b: float, s: float, interval: str) -> np.ndarray:
    """Branch values ``(t_1, t_2, t_3)`` on an array of angles, shape ``(n, 3)``."""
    lam = _bloch_lambda_min(scenario, thetas, eta_b, s, interval)
    return np.stack([lam[:, _INDEX_BRANCH == k].mean(axis=1) for k in XS], axis=1)


def _mean_t(scenario: str, theta: float, eta_b: float, s: float, interval: str) -> float:
    return float(t_grid(scenario, [theta], eta_b, s, interval).mean())


@dataclass(frozen=True)
class TMinimizationResult:
    scenario: str
    s: float
    eta_b: float
    t_value: float
    theta_argmin: float
    interval: str
    per_branch: tuple[float, float, float]
    grid_resolution: int


def _interval_grid(interval: str, n: int) -> np.ndarray:
    if interval == LOW:
        return np.linspace(0.0, THETA_SPLIT, n)
    # open at pi/3: that point belongs to the low interval
    return np.linspace(THETA_SPLIT, THETA_MAX, n + 1)[1:]


def minimize_t(scenario: str, s: float, eta_b: float,
               grid_n: int = DEFAULT_GRID_N) -> TMinimizationResult:
    """Minimum over ``theta in [0, pi/2]`` of ``(t_1 + t_2 + t_3)/3``.

    Each interval is scanned on ``grid_n`` points.  The best grid point is
    then refined with bounded Brent search between its neighbours.
    """
    _check_scenario(scenario)
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    best: Optional[tuple[float, float, str]] = None
    for interval in (LOW, HIGH):
        grid = _interval_grid(interval, grid_n)
        values = t_grid(scenario, grid, eta_b, s, interval).mean(axis=1)
        i = int(np.argmin(values))
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
        theta, value = float(grid[i]), float(values[i])
        if hi > lo:
            res = minimize_scalar(lambda th: _mean_t(scenario, th, eta_b, s, interval),
                                  bounds=(lo, hi), method="bounded",
                                  options={"xatol": 1e-10})
            if res.fun < value:
                theta, value = float(res.x), float(res.fun)
        if best is None or value < best[1]:
            best = (theta, value, interval)
    assert best is not None
    theta, _, interval = best
    branches = t_branches(scenario, theta, eta_b, s, interval)
    return TMinimizationResult(scenario, float(s), float(eta_b), float(np.mean(branches)),
                               theta, interval, branches, grid_n)


@dataclass(frozen=True)
class InequalityReport:
    scenario: str
    s: float
    eta_b: float
    points: int
    worst_lambda_min: float
    worst_location: tuple[float, str, tuple[int, int]]
    t_claimed: Optional[float]
    worst_margin: Optional[float]
    worst_margin_theta: Optional[float]
    boundary_gap: float
    tol: float

    @property
    def inequalities_hold(self) -> bool:
        return self.worst_lambda_min >= -self.tol

    @property
    def claim_holds(self) -> bool:
        return self.worst_margin is None or self.worst_margin >= -self.tol

    @property
    def ok(self) -> bool:
        return self.inequalities_hold and self.claim_holds


def verify_operator_inequalities(scenario: str, s: float, eta_b: float,
                                 t: Optional[float] = None,
                                 grid_n: int = DEFAULT_GRID_N,
                                 tol: float = 1e-9) -> InequalityReport:
    """Check ``K - s T - t_branch I >= 0`` on a ``theta`` grid using the closed-form ``t_branch``.

    When ``t`` is given, also check the claimed intercept against the grid:
    ``mean_k t_k(theta) >= t`` must hold at every angle.  ``boundary_gap`` is
    the jump in ``mean_k t_k`` across ``pi/3`` between the two ``Gamma`` branches.
    """
    _check_scenario(scenario)
    worst = np.inf
    where: tuple[float, str, tuple[int, int]] = (0.0, LOW, (1, 0))
    margin = np.inf
    margin_theta = None
    points = 0
    for interval in (LOW, HIGH):
        grid = _interval_grid(interval, grid_n)
        points += len(grid)
        lam = _bloch_lambda_min(scenario, grid, eta_b, s, interval)
        closed = closed_form_t_grid(scenario, grid, s, eta_b, interval)
        shifted = lam - closed[:, _INDEX_BRANCH - 1]
        n, i = np.unravel_index(int(np.argmin(shifted)), shifted.shape)
        if shifted[n, i] < worst:
            worst, where = float(shifted[n, i]), (float(grid[n]), interval, PREP_KEYS[i])
        if t is not None:
            gaps = closed.mean(axis=1) - t
            k = int(np.argmin(gaps))
            if gaps[k] < margin:
                margin, margin_theta = float(gaps[k]), float(grid[k])
    boundary = abs(t_of_theta(scenario, THETA_SPLIT, eta_b, s, LOW)
                   - t_of_theta(scenario, THETA_SPLIT, eta_b, s, HIGH))
    return InequalityReport(scenario, float(s), float(eta_b), points, float(worst), where,
                            t, None if t is None else float(margin), margin_theta,
                            float(boundary), tol)


@dataclass(frozen=True)
class FidelityBound:
    """``F(A) = (s/6)(A - 1/2) + t`` when ``centered`` else ``(s/6) A + t``."""

    s: float
    t: float
    centered: bool

    def __call__(self, a: float) -> float:
        shift = 0.5 if self.centered else 0.0
        return self.s / 6.0 * (a - shift) + self.t


def fidelity_bound(scenario: str, eta_b: float) -> FidelityBound:
    s, t = default_s(scenario, eta_b), paper_t(scenario, eta_b)
    return FidelityBound(s, t, centered=scenario == "prep")


def optimum(scenario: str, eta_b: float) -> float:
    """Success probability at which the scenario's bound reaches 1."""
    _check_scenario(scenario)
    return omega_c(eta_b, 1.0) if scenario == "meas_charlie" else omega_b(eta_b)


def _check_success(a: float, hi: float, name: str) -> float:
    if not 0.5 - 1e-12 <= a <= hi + 1e-12:
        raise ValueError(f"{name} = {a!r} outside [1/2, {hi!r}]")
    return float(a)


def fidelity_bound_prep(a_b: float, eta_b: float) -> float:
    """``(3 / (2 eta_B))(A_B - 1/2) + 1/2``."""
    a_b = _check_success(a_b, omega_b(_check_eta(eta_b)), "A_B")
    return 1.5 / eta_b * (a_b - 0.5) + 0.5


def fidelity_bound_meas_bob(a_b: float, eta_b: float) -> float:
    """``(3/2) A_B + 1/4 - eta_B / 2``."""
    a_b = _check_success(a_b, omega_b(_check_eta(eta_b)), "A_B")
    return 1.5 * a_b + 0.25 - eta_b / 2.0


def fidelity_bound_meas_charlie(a_c: float, eta_b: float) -> float:
    """``(9 / (7 g - 1)) A_C + (9 - 6 g)/(2 - 14 g)`` with ``g`` Bob's shrink factor."""
    a_c = _check_success(a_c, omega_c(_check_eta(eta_b), 1.0), "A_C")
    g = shrink_factor(eta_b)
    return 9.0 / (7.0 * g - 1.0) * a_c + (9.0 - 6.0 * g) / (2.0 - 14.0 * g)


FIDELITY_BOUNDS = {
    "prep": fidelity_bound_prep,
    "meas_bob": fidelity_bound_meas_bob,
    "meas_charlie": fidelity_bound_meas_charlie,
}
