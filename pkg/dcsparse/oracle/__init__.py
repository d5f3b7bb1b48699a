from dcsparse.oracle.estimator import (
    OracleResult,
    OracleStationarity,
    RANK_TOLERANCE,
    oracle_fit,
    oracle_is_dstationary,
)

__all__ = [
    "OracleResult",
    "OracleStationarity",
    "RANK_TOLERANCE",
    "oracle_fit",
    "oracle_is_dstationary",
]
