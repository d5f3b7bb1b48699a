from dcsparse.stationarity.checks import (
    Assumption8Audit,
    StationarityReport,
    audit_assumption8,
    check_d_stationary,
    default_tolerance,
    directional_derivative,
    stationarity_residuals,
)

__all__ = [
    "Assumption8Audit",
    "StationarityReport",
    "audit_assumption8",
    "check_d_stationary",
    "default_tolerance",
    "directional_derivative",
    "stationarity_residuals",
]
