"""Parity-oblivious prepare-measure game with sequential unsharp receivers."""

from __future__ import annotations

from .certification import (
    CLASSICAL_BOUND,
    CertificationVerdict,
    ObservedPair,
    certify,
    eta_c_min,
    eta_max_from_charlie,
    eta_min_from_bob,
    required_eta_d,
    tradeoff_curve,
)
from .classical import ClassicalStrategy, OracleResult, enumerate_max, strategy_success
from .game import (
    ConditionalTable,
    PreparationSet,
    born_table,
    check_parity_oblivious,
    parity_class,
    success_probability,
    winning_output,
)
from .quantum import (
    SequentialConfig,
    bob_success_numeric,
    charlie_success_numeric,
    debbie_success_numeric,
    ideal_config,
    n_vectors,
    omega_b,
    omega_c,
    omega_c_exact,
    omega_d,
    omega_d_exact,
    trine_preparations,
)

__version__ = "0.1.0"
