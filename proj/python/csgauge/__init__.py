"""Radial Chern-Simons-Schroedinger energies, limit solitons and frequency thresholds."""

from ._csgauge import (
    DivergenceError,
    cs_inequality_gap,
    degenerate_root,
    energy_I,
    energy_J,
    minimize_on_ball,
    nonexistence_threshold,
    omega0,
    omega1,
    psi_curve,
    soliton_mass,
    soliton_wk,
    solve_eq_k,
    sweep,
    thresholds,
    verify,
)

__all__ = [
    "DivergenceError",
    "cs_inequality_gap",
    "degenerate_root",
    "energy_I",
    "energy_J",
    "minimize_on_ball",
    "nonexistence_threshold",
    "omega0",
    "omega1",
    "psi_curve",
    "soliton_mass",
    "soliton_wk",
    "solve_eq_k",
    "sweep",
    "thresholds",
    "verify",
]
