"""
Oracle estimator: least squares restricted to a known support

    β^O_S = argmin (1/2n)‖y − X_S b‖²,   β^O_{S^c} = 0
"""
from dataclasses import dataclass
from typing import Iterable, Optional, TYPE_CHECKING

import numpy as np
from scipy import linalg

from dcsparse.exceptions import ParameterDomainError, SingularDesignError, UnsupportedFamilyError
from dcsparse.logging import get_logger
from dcsparse.losses import LossKind, Problem
from dcsparse.penalties import PenaltySpec, dc_profile
from dcsparse.stationarity import StationarityReport, check_d_stationary

if TYPE_CHECKING:
    from dcsparse.data import SyntheticTruth

logger = get_logger(__name__)

RANK_TOLERANCE = 1e-10


@dataclass(frozen=True)
class OracleResult:
    beta_oracle: np.ndarray
    support: np.ndarray
    gram_min_eigenvalue: float
    linf_error_vs_truth: Optional[float] = None


@dataclass(frozen=True)
class OracleStationarity:
    is_d_stationary: bool
    report: StationarityReport
    signal_condition_met: bool
    min_signal: float
    zeta: float


def _normalize_support(support: Iterable[int], p: int) -> np.ndarray:
    indices = np.unique(np.asarray(list(support), dtype=int))
    if indices.size == 0:
        raise ParameterDomainError("oracle support must be nonempty")
    if indices[0] < 0 or indices[-1] >= p:
        raise ParameterDomainError("support index out of range", {"p": p, "support": indices.tolist()})
    return indices


def oracle_fit(problem: Problem, support: Iterable[int], truth: Optional["SyntheticTruth"] = None) -> OracleResult:
    """
    Restricted least squares on the columns in support

    Raises:
        SingularDesignError: λ_min((1/n)X_SᵀX_S) ≤ 1e-10·‖X_S‖²₂/n
        UnsupportedFamilyError: logistic problems
    """
    if problem.loss is not LossKind.SQUARED:
        raise UnsupportedFamilyError("the oracle estimator is defined for squared loss only")

    indices = _normalize_support(support, problem.p)
    design = problem.design[:, indices]
    n = problem.n

    eigenvalues = linalg.eigvalsh(design.T @ design / n)
    gram_min, gram_max = float(eigenvalues[0]), float(eigenvalues[-1])
    if gram_min <= RANK_TOLERANCE * gram_max:
        raise SingularDesignError(
            "restricted design is rank deficient",
            {"gram_min_eigenvalue": gram_min, "support_size": int(indices.size)},
        )

    coefficients, *_ = linalg.lstsq(design, problem.response)
    beta = np.zeros(problem.p)
    beta[indices] = coefficients

    linf_error = None
    if truth is not None:
        linf_error = float(np.max(np.abs(beta - truth.beta_star)))

    return OracleResult(
        beta_oracle=beta,
        support=indices,
        gram_min_eigenvalue=gram_min,
        linf_error_vs_truth=linf_error,
    )


def oracle_is_dstationary(
    problem: Problem,
    spec: PenaltySpec,
    oracle: OracleResult,
    truth: "SyntheticTruth",
    tol: Optional[float] = None,
) -> OracleStationarity:
    """
    Check whether the oracle estimator is a d-stationary point of the penalized problem

    The guarantee needs min |β*_S| > 2ζ; whether that held is reported, not enforced.
    """
    profile = dc_profile(spec)
    if profile.zeta is None:
        raise UnsupportedFamilyError(
            f"{spec.family.value} has no flat tail, so the oracle is never a stationary point",
            {"family": spec.family.value},
        )

    support_values = np.abs(truth.beta_star[truth.support])
    min_signal = float(np.min(support_values)) if support_values.size else 0.0
    signal_met = min_signal > 2.0 * profile.zeta
    if not signal_met:
        logger.info(
            "Signal strength below twice the flat-tail threshold",
            extra={"extra_data": {"min_signal": min_signal, "zeta": profile.zeta}},
        )

    report = check_d_stationary(problem, spec, oracle.beta_oracle, tol)
    return OracleStationarity(
        is_d_stationary=report.is_d_stationary,
        report=report,
        signal_condition_met=signal_met,
        min_signal=min_signal,
        zeta=float(profile.zeta),
    )
