"""
dcsparse - Sparse regression with difference-of-convex penalties
DCA fitting, d-stationarity certificates, oracle estimators and error-bound experiments
"""

__version__ = "0.1.0"

# Export main components
from dcsparse.config import DcSparseSettings, get_settings
from dcsparse.exceptions import (
    DcSparseException,
    ExitCode,
    NumericalFailureError,
    ParameterDomainError,
    ParseError,
    RegimeError,
    ResponseDomainError,
    ShapeError,
    SingularDesignError,
    UnsupportedFamilyError,
)
from dcsparse.logging import setup_logging, setup_logging_from_settings, get_logger
from dcsparse.penalties import PenaltyFamily, PenaltySpec, dc_profile, penalty_value
from dcsparse.losses import LossKind, Problem, loss_eval
from dcsparse.solver import FitResult, SolverConfig, dca_fit, weighted_l1_solve
from dcsparse.stationarity import StationarityReport, check_d_stationary, directional_derivative
from dcsparse.oracle import OracleResult, oracle_fit, oracle_is_dstationary
from dcsparse.data import SyntheticSpec, SyntheticTruth, generate, read_csv, write_csv

__all__ = [
    # Version
    "__version__",

    # Config
    "DcSparseSettings",
    "get_settings",

    # Exceptions
    "DcSparseException",
    "ExitCode",
    "NumericalFailureError",
    "ParameterDomainError",
    "ParseError",
    "RegimeError",
    "ResponseDomainError",
    "ShapeError",
    "SingularDesignError",
    "UnsupportedFamilyError",

    # Logging
    "setup_logging",
    "setup_logging_from_settings",
    "get_logger",

    # Modeling
    "PenaltyFamily",
    "PenaltySpec",
    "dc_profile",
    "penalty_value",
    "LossKind",
    "Problem",
    "loss_eval",
    "FitResult",
    "SolverConfig",
    "dca_fit",
    "weighted_l1_solve",
    "StationarityReport",
    "check_d_stationary",
    "directional_derivative",
    "OracleResult",
    "oracle_fit",
    "oracle_is_dstationary",

    # Data
    "SyntheticSpec",
    "SyntheticTruth",
    "generate",
    "read_csv",
    "write_csv",
]
