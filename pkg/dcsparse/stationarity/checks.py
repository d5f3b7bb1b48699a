"""
First-order certification of d-stationary points

For F(β) = L_n(β) + λ‖β‖₁ − Σ h_λ(β_i), a point β is d-stationary when there is
z ∈ ∂‖β‖₁ with ∇L_n(β) + λz − ∇h_λ(β) = 0. The checks below measure how far a
candidate is from that condition and build the certificate z.
"""
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from dcsparse.exceptions import ParameterDomainError
from dcsparse.losses import Problem, check_coefficients, loss_gradient
from dcsparse.penalties import PenaltySpec, h_derivative, h_directional_derivative

DEFAULT_RELATIVE_TOL = 1e-6
DEFAULT_AUDIT_C = 0.5


@dataclass(frozen=True)
class StationarityReport:
    residuals: np.ndarray
    max_violation: float
    subgradient_certificate: np.ndarray
    is_d_stationary: bool
    strict_dual_feasible: bool
    tol: float

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "coordinate": np.arange(1, self.residuals.shape[0] + 1),
            "residual": self.residuals,
            "certificate": self.subgradient_certificate,
        })


@dataclass(frozen=True)
class Assumption8Audit:
    holds: bool
    margins: pd.Series
    exact: bool


def default_tolerance(gradient: np.ndarray) -> float:
    return DEFAULT_RELATIVE_TOL * (1.0 + float(np.max(np.abs(gradient))))


def stationarity_residuals(gradient: np.ndarray, h_prime: np.ndarray, beta: np.ndarray, lam: float) -> np.ndarray:
    """Per-coordinate violation of ∇L + λz − ∇h = 0 over the best admissible z"""
    smooth_part = gradient - h_prime
    nonzero = beta != 0
    on_support = np.abs(smooth_part + lam * np.sign(beta))
    off_support = np.maximum(0.0, np.abs(smooth_part) - lam)
    return np.where(nonzero, on_support, off_support)


def check_d_stationary(
    problem: Problem,
    spec: PenaltySpec,
    beta: np.ndarray,
    tol: Optional[float] = None,
) -> StationarityReport:
    """
    Certify the first-order condition at beta

    tol defaults to 1e-6·(1 + ‖∇L_n(β)‖∞).

    Example:
        report = check_d_stationary(problem, spec, fit.beta_hat)
        report.is_d_stationary, report.max_violation
    """
    beta = check_coefficients(problem, beta)
    gradient = loss_gradient(problem, beta)
    h_prime = np.asarray(h_derivative(spec, beta), dtype=float)
    lam = spec.lam

    if tol is None:
        tol = default_tolerance(gradient)
    if not tol > 0:
        raise ParameterDomainError("tolerance must be positive", {"tol": tol})

    residuals = stationarity_residuals(gradient, h_prime, beta, lam)
    max_violation = float(np.max(residuals))

    zero = beta == 0
    if lam > 0:
        raw = -(gradient - h_prime) / lam
    else:
        raw = np.where(np.abs(gradient - h_prime) > 0, np.inf, 0.0)
    certificate = np.where(zero, np.clip(raw, -1.0, 1.0), np.sign(beta))
    strict = bool(np.all(np.abs(raw[zero]) < 1.0)) if np.any(zero) else True

    return StationarityReport(
        residuals=residuals,
        max_violation=max_violation,
        subgradient_certificate=certificate,
        is_d_stationary=max_violation <= tol,
        strict_dual_feasible=strict,
        tol=float(tol),
    )


def directional_derivative(
    problem: Problem,
    spec: PenaltySpec,
    beta: np.ndarray,
    direction: np.ndarray,
) -> float:
    """
    One-sided derivative F'(β; d), computed analytically

    Nonzero coordinates contribute λ·sign(β_i)d_i, zero coordinates λ|d_i|.
    """
    beta = check_coefficients(problem, beta)
    direction = check_coefficients(problem, direction)
    gradient = loss_gradient(problem, beta)
    lam = spec.lam

    l1_part = np.where(beta != 0, np.sign(beta) * direction, np.abs(direction))
    h_part = np.asarray(h_directional_derivative(spec, beta, direction), dtype=float)
    return float(gradient @ direction + lam * np.sum(l1_part) - np.sum(h_part))


def audit_assumption8(
    problem: Problem,
    beta_hat: np.ndarray,
    lambda_: float,
    support: Iterable[int],
    c: float = DEFAULT_AUDIT_C,
    beta_star: Optional[np.ndarray] = None,
) -> Assumption8Audit:
    """
    Margins of (1/n)x_jᵀX(β* − β̂)·sign(β̂_j) − cλ over j ∉ S with β̂_j ≠ 0

    Without beta_star the observable surrogate (1/n)x_jᵀ(y − Xβ̂)·sign(β̂_j) is used.
    An empty set of indices to check passes.
    """
    if not 0 < c < 1:
        raise ParameterDomainError("c must lie in (0, 1)", {"c": c})
    beta_hat = check_coefficients(problem, beta_hat)

    in_support = np.zeros(problem.p, dtype=bool)
    in_support[list(support)] = True
    checked = np.flatnonzero(~in_support & (beta_hat != 0))

    X, n = problem.design, problem.n
    if beta_star is not None:
        target = X @ check_coefficients(problem, beta_star)
    else:
        target = problem.response
    residual = target - X @ beta_hat

    lhs = X[:, checked].T @ residual / n * np.sign(beta_hat[checked])
    margins = pd.Series(lhs - c * lambda_, index=checked, name="margin", dtype=float)
    return Assumption8Audit(
        holds=bool(np.all(margins.to_numpy() >= 0.0)),
        margins=margins,
        exact=beta_star is not None,
    )
