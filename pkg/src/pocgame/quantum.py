"""Quantum strategies: trine preparations and sequential unsharp receivers.

Bob, Charlie and Debbie measure the same system one after another.  Each one
uses a three-setting unsharp measurement and passes the post-measurement state
on without revealing his outcome.  Success probabilities are computed two ways:

* numerically, by building density matrices, Kraus maps and Born tables;
* in closed form, through the ``n``-vectors and the Bloch-vector update rule.

Two families of closed-form optima are exposed.  ``omega_b``, ``omega_c`` and
``omega_d`` are the published expressions.  ``omega_c_exact`` and
``omega_d_exact`` are the values the trine configuration actually attains;
they differ from the published ones for Charlie and Debbie because the trine
axes are not mutually orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.spatial.transform import Rotation

from .game import PREP_KEYS, YS, PreparationSet, born_table, success_probability
from .qubit import (
    KrausPair,
    apply_kraus_average,
    as_vector,
    bloch_to_state,
    kraus_coefficients,
    make_effects,
    make_kraus,
)

IDEAL_THETA = np.pi / 3
Directions = tuple[np.ndarray, np.ndarray, np.ndarray]


def _unit(v) -> np.ndarray:
    v = as_vector(v)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / norm


def _check_eta(eta: float, name: str = "eta") -> float:
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {eta!r}")
    return float(eta)


def trine_vectors(theta: float = IDEAL_THETA) -> dict[tuple[int, int], np.ndarray]:
    """Bloch vectors ``r_xa`` of the trine family with opening angle ``theta``.

    ``r_10 = x``, ``r_20 = (-cos t, 0, sin t)``, ``r_30 = (-cos t, 0, -sin t)`` and
    ``r_x1 = -r_x0``.  ``theta = pi/3`` gives the symmetric trine.
    """
    if not 0.0 <= theta <= np.pi / 2 + 1e-15:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta!r}")
    c, s = np.cos(theta), np.sin(theta)
    base = {
        1: np.array([1.0, 0.0, 0.0]),
        2: np.array([-c, 0.0, s]),
        3: np.array([-c, 0.0, -s]),
    }
    out = {}
    for x, r in base.items():
        out[(x, 0)] = r
        out[(x, 1)] = -r
    return out


def trine_preparations(theta: float = IDEAL_THETA) -> PreparationSet:
    return PreparationSet({k: bloch_to_state(r) for k, r in trine_vectors(theta).items()})


def preparations_from_bloch(vectors: dict[tuple[int, int], np.ndarray]) -> PreparationSet:
    return PreparationSet({k: bloch_to_state(vectors[k]) for k in PREP_KEYS})


def antipodal_preparations(r0: Sequence) -> PreparationSet:
    """Preparations with ``r_x0 = r0[x-1]`` and ``r_x1 = -r_x0``."""
    vectors = {}
    for x, r in zip((1, 2, 3), r0):
        r = as_vector(r)
        vectors[(x, 0)] = r
        vectors[(x, 1)] = -r
    return preparations_from_bloch(vectors)


def ideal_directions(theta: float = IDEAL_THETA) -> Directions:
    """Measurement axes ``-r_hat_{k0}`` aligned against the ``a = 0`` preparations."""
    r = trine_vectors(theta)
    return tuple(-_unit(r[(k, 0)]) for k in YS)  # type: ignore[return-value]


@dataclass(frozen=True)
class SequentialConfig:
    """Unsharpness and measurement axes for up to three sequential receivers."""

    eta_b: float
    eta_c: float = 1.0
    eta_d: float = 1.0
    dirs_b: Directions = None  # type: ignore[assignment]
    dirs_c: Directions = None  # type: ignore[assignment]
    dirs_d: Directions = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        for name in ("eta_b", "eta_c", "eta_d"):
            object.__setattr__(self, name, _check_eta(getattr(self, name), name))
        default = ideal_directions()
        for name in ("dirs_b", "dirs_c", "dirs_d"):
            dirs = getattr(self, name)
            if dirs is None:
                dirs = default
            if len(dirs) != 3:
                raise ValueError(f"{name} needs three directions")
            unit = tuple(as_vector(d) for d in dirs)
            for d in unit:
                if abs(np.linalg.norm(d) - 1.0) > 1e-12:
                    raise ValueError(f"{name} contains a non-unit direction")
            object.__setattr__(self, name, unit)

    def effects(self, who: str):
        eta, dirs = self._pick(who)
        return [make_effects(d, eta) for d in dirs]

    def kraus(self, who: str) -> list[KrausPair]:
        eta, dirs = self._pick(who)
        return [make_kraus(d, eta) for d in dirs]

    def _pick(self, who: str) -> tuple[float, Directions]:
        try:
            return {
                "b": (self.eta_b, self.dirs_b),
                "c": (self.eta_c, self.dirs_c),
                "d": (self.eta_d, self.dirs_d),
            }[who]
        except KeyError:
            raise ValueError(f"unknown receiver {who!r}") from None


def ideal_config(eta_b: float, eta_c: float = 1.0, eta_d: float = 1.0,
                 theta: float = IDEAL_THETA) -> SequentialConfig:
    dirs = ideal_directions(theta)
    return SequentialConfig(eta_b, eta_c, eta_d, dirs, dirs, dirs)


def n_vectors_from_bloch(vectors: dict[tuple[int, int], np.ndarray]) -> Directions:
    """``n_y = sum_{x,a} (-1)^(delta(x,y) XOR a) r_xa``.

    With these vectors the Born-rule success of an unsharp receiver reads
    ``1/2 + (eta/36) sum_y n_y . b_y``.  For antipodal pairs
    ``n_1 = 2(-r_10 + r_20 + r_30)`` and cyclically.
    """
    out = []
    for y in YS:
        n = np.zeros(3)
        for (x, a), r in vectors.items():
            sign = -1.0 if (int(x == y) ^ a) else 1.0
            n += sign * r
        out.append(n)
    return tuple(out)  # type: ignore[return-value]


def n_vectors(prep: PreparationSet) -> Directions:
    return n_vectors_from_bloch({k: prep.bloch(*k) for k in PREP_KEYS})


def bob_success_numeric(prep: PreparationSet, config: SequentialConfig) -> float:
    """Bob's success probability from the Born table of his unsharp effects."""
    return float(success_probability(born_table(prep, config.effects("b"))))


def bob_success_closed(prep: PreparationSet, dirs: Sequence, eta: float) -> float:
    """``1/2 + (eta/36) sum_y n_y . b_y``."""
    ns = n_vectors(prep)
    return 0.5 + eta / 36.0 * sum(float(n @ as_vector(b)) for n, b in zip(ns, dirs))


def after_measurement(prep: PreparationSet, pairs: Sequence[KrausPair]) -> PreparationSet:
    """Average post-measurement states when outcome and setting are discarded."""
    return prep.map(lambda rho: apply_kraus_average(rho, pairs))


def charlie_success_numeric(prep: PreparationSet, config: SequentialConfig) -> float:
    after_b = after_measurement(prep, config.kraus("b"))
    return float(success_probability(born_table(after_b, config.effects("c"))))


def debbie_success_numeric(prep: PreparationSet, config: SequentialConfig) -> float:
    after_b = after_measurement(prep, config.kraus("b"))
    after_c = after_measurement(after_b, config.kraus("c"))
    return float(success_probability(born_table(after_c, config.effects("d"))))


def reduced_bloch(r, dirs: Sequence, eta: float) -> np.ndarray:
    """Closed-form Bloch vector after a uniformly random unsharp measurement.

    ``r -> 2(alpha^2 - beta^2) r + (4 beta^2 / 3) sum_y (b_y . r) b_y``.
    """
    r = as_vector(r)
    alpha, beta = kraus_coefficients(_check_eta(eta))
    out = 2.0 * (alpha**2 - beta**2) * r
    for b in dirs:
        b = as_vector(b)
        out = out + (4.0 * beta**2 / len(dirs)) * (b @ r) * b
    return out


def charlie_success_expanded(prep: PreparationSet, config: SequentialConfig) -> float:
    """Charlie's success via the Bloch update rule and ``n``-vectors (no matrices)."""
    vectors = {
        k: reduced_bloch(prep.bloch(*k), config.dirs_b, config.eta_b) for k in PREP_KEYS
    }
    ns = n_vectors_from_bloch(vectors)
    return 0.5 + config.eta_c / 36.0 * sum(float(n @ c) for n, c in zip(ns, config.dirs_c))


def shrink_factor(eta: float) -> float:
    """In-plane Bloch contraction ``gamma = (1 + sqrt(1 - eta^2)) / 2`` of a trine measurement."""
    return 0.5 * (1.0 + np.sqrt(1.0 - _check_eta(eta) ** 2))


def omega_b(eta_b: float) -> float:
    """Optimal Bob success ``(1 + 2 eta_B / 3) / 2``."""
    return 0.5 * (1.0 + 2.0 * _check_eta(eta_b) / 3.0)


def omega_c(eta_b: float, eta_c: float = 1.0) -> float:
    """Published Charlie optimum ``(1 + 2 eta_C (1 + 2 sqrt(1 - eta_B^2)) / 9) / 2``."""
    root = np.sqrt(1.0 - _check_eta(eta_b) ** 2)
    return 0.5 * (1.0 + 2.0 * _check_eta(eta_c) * (1.0 + 2.0 * root) / 9.0)


def omega_d(eta_b: float, eta_c: float, eta_d: float = 1.0) -> float:
    """Published Debbie optimum."""
    rb = np.sqrt(1.0 - _check_eta(eta_b) ** 2)
    rc = np.sqrt(1.0 - _check_eta(eta_c) ** 2)
    return 0.5 * (1.0 + 2.0 * _check_eta(eta_d) / 27.0 * (1.0 + 2.0 * rb) * (1.0 + 2.0 * rc))


def omega_c_exact(eta_b: float, eta_c: float = 1.0) -> float:
    """Charlie's value on the trine configuration: ``1/2 + eta_C gamma_B / 3``."""
    return 0.5 + _check_eta(eta_c) * shrink_factor(eta_b) / 3.0


def omega_d_exact(eta_b: float, eta_c: float, eta_d: float = 1.0) -> float:
    """Debbie's value on the trine configuration: ``1/2 + eta_D gamma_B gamma_C / 3``."""
    return 0.5 + _check_eta(eta_d) * shrink_factor(eta_b) * shrink_factor(eta_c) / 3.0


def random_unit(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            return v / norm


def oblivious_antipodal_triple(even_set: frozenset) -> list[np.ndarray]:
    """A reference solution ``(r_10, r_20, r_30)`` of the parity constraint for pure antipodal pairs.

    With ``r_x1 = -r_x0`` the constraint reads ``sum_x w_x r_x0 = 0`` where
    ``w_x`` is nonzero only when ``(x, 0)`` and ``(x, 1)`` sit in different
    classes.  That happens for one or three values of ``x``.  One is
    unsatisfiable by unit vectors.  Three forces ``w_x r_x0`` onto a trine,
    so every solution is a rotation of the one returned here.
    """
    if len(even_set) != 3 or not even_set <= set(PREP_KEYS):
        raise ValueError("even class must be three of the six (x, a) inputs")
    w = [((x, 0) in even_set) - ((x, 1) in even_set) for x in YS]
    if 0 in w:
        raise ValueError("no pure antipodal preparations satisfy this parity split")
    trine = trine_vectors()
    return [w[x - 1] * trine[(x, 0)] for x in YS]


def random_configuration(rng: np.random.Generator, spread: float | None = None,
                         even_set: Optional[frozenset] = None
                         ) -> tuple[PreparationSet, SequentialConfig]:
    """Random antipodal pure preparations with random receiver axes and unsharpness.

    With ``spread=None`` every direction is uniform on the sphere.  Otherwise
    each ideal direction is jittered by Gaussian noise of scale ``spread`` so
    the samples concentrate near the optimum.  Passing ``even_set`` restricts
    the preparations to those oblivious under that parity split.
    """
    if even_set is not None:
        return _random_oblivious_configuration(rng, spread, even_set)
    if spread is None:
        r0 = [random_unit(rng) for _ in range(3)]
        dirs = [tuple(random_unit(rng) for _ in range(3)) for _ in range(3)]
    else:
        ideal_r = trine_vectors()
        ideal_d = ideal_directions()
        jitter = lambda v: _unit(v + spread * rng.normal(size=3))  # noqa: E731
        r0 = [jitter(ideal_r[(x, 0)]) for x in (1, 2, 3)]
        dirs = [tuple(jitter(d) for d in ideal_d) for _ in range(3)]
    etas = rng.uniform(0.0, 1.0, size=3)
    config = SequentialConfig(etas[0], etas[1], etas[2], *dirs)
    return antipodal_preparations(r0), config


def _random_oblivious_configuration(rng: np.random.Generator, spread: float | None,
                                    even_set: frozenset
                                    ) -> tuple[PreparationSet, SequentialConfig]:
    base = np.array(oblivious_antipodal_triple(even_set))
    if spread is None:
        rot = Rotation.random(None, rng)
        dirs = [tuple(random_unit(rng) for _ in range(3)) for _ in range(3)]
    else:
        rot = Rotation.from_rotvec(spread * rng.normal(size=3))
        ns = n_vectors(antipodal_preparations(base))
        # n_y can vanish; any axis is then as good as another
        target = [_unit(n) if np.linalg.norm(n) > 1e-9 else random_unit(rng) for n in ns]
        jitter = lambda v: _unit(rot.apply(v) + spread * rng.normal(size=3))  # noqa: E731
        dirs = [tuple(jitter(d) for d in target) for _ in range(3)]
    etas = rng.uniform(0.0, 1.0, size=3)
    config = SequentialConfig(etas[0], etas[1], etas[2], *dirs)
    return antipodal_preparations(rot.apply(base)), config


@dataclass(frozen=True)
class SamplingReport:
    samples: int
    seed: int
    max_excess_bob: float
    max_excess_charlie: float
    max_excess_charlie_exact: float

    def passes(self, tol: float = 1e-9, exact: bool = False) -> bool:
        charlie = self.max_excess_charlie_exact if exact else self.max_excess_charlie
        return self.max_excess_bob <= tol and charlie <= tol


def sample_optimality(samples: int = 10_000, seed: int = 0, spread: float = 0.3,
                      even_set: Optional[frozenset] = None) -> SamplingReport:
    """Largest excess of sampled Bob/Charlie success over the closed-form optima.

    Even-indexed samples are near-ideal (jitter up to ``spread``), odd-indexed
    ones are uniform.  Without ``even_set`` the preparations are unconstrained
    antipodal pairs, a superset of every parity-oblivious family.
    """
    rng = np.random.default_rng(seed)
    worst_b = worst_c = worst_cx = -np.inf
    for i in range(samples):
        jitter = rng.uniform(0.0, spread) if i % 2 == 0 else None
        prep, cfg = random_configuration(rng, jitter, even_set)
        a_b = bob_success_numeric(prep, cfg)
        a_c = charlie_success_numeric(prep, cfg)
        worst_b = max(worst_b, a_b - omega_b(cfg.eta_b))
        worst_c = max(worst_c, a_c - omega_c(cfg.eta_b, cfg.eta_c))
        worst_cx = max(worst_cx, a_c - omega_c_exact(cfg.eta_b, cfg.eta_c))
    return SamplingReport(samples, seed, float(worst_b), float(worst_c), float(worst_cx))
