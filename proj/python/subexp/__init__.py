"""Exact counts and asymptotic estimates for multiplicative generating functions."""

from ._core import (
    Error,
    Model,
    Spectrum,
    congruent,
    custom_spectrum,
    exact_coefficients,
    hurwitz_zeta,
    kappa,
    log_estimate,
    log_gamma,
    pentagonal_oracle,
    precision,
    q_constant,
    riemann_zeta,
    riemann_zeta_str,
    roots,
    run_cli,
    set_precision,
    solve_delta,
    spectrum,
    standard,
    verify,
    weight_table,
)

__all__ = [
    "Error",
    "Model",
    "Spectrum",
    "congruent",
    "custom_spectrum",
    "exact_coefficients",
    "hurwitz_zeta",
    "kappa",
    "log_estimate",
    "log_gamma",
    "pentagonal_oracle",
    "precision",
    "q_constant",
    "riemann_zeta",
    "riemann_zeta_str",
    "roots",
    "run_cli",
    "set_precision",
    "solve_delta",
    "spectrum",
    "standard",
    "verify",
    "weight_table",
]
