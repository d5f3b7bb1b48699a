"""
DC Penalties
============
Penalty families written as p_λ(t) = λ|t| − h_λ(t) with a convex correction h_λ.

Usage:
    from dcsparse.penalties import PenaltySpec, penalty_value, h_derivative, dc_profile

    spec = PenaltySpec(family="scad", lam=0.5, shape=3.7)
    penalty_value(spec, 1.2)
"""
from dcsparse.penalties.spec import (
    Assumption,
    DcProfile,
    PenaltyFamily,
    PenaltySpec,
    SCALE_FREE_FAMILIES,
)
from dcsparse.penalties.decomposition import (
    capped_window,
    dc_profile,
    estimate_eta_minus,
    h_derivative,
    h_directional_derivative,
    h_value,
    make_grid,
    penalty_curve,
    penalty_derivative,
    penalty_value,
    scale_check,
)

__all__ = [
    "Assumption",
    "DcProfile",
    "PenaltyFamily",
    "PenaltySpec",
    "SCALE_FREE_FAMILIES",
    "capped_window",
    "dc_profile",
    "estimate_eta_minus",
    "h_derivative",
    "h_directional_derivative",
    "h_value",
    "make_grid",
    "penalty_curve",
    "penalty_derivative",
    "penalty_value",
    "scale_check",
]
