"""
Finite-sample error bounds and the assumption audits behind them
"""
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy import optimize

from dcsparse.data import SyntheticTruth
from dcsparse.exceptions import ParameterDomainError, RegimeError
from dcsparse.losses import Problem, check_coefficients, loss_eval
from dcsparse.penalties import PenaltySpec, h_derivative, h_value
from dcsparse.schemas import BoundReport
from dcsparse.solver import FitResult

Estimate = Union[FitResult, np.ndarray]

STATED_GLM_C = 0.25
ORACLE_LINF_CONSTANT = 3.0


def _coefficients(fit: Estimate) -> np.ndarray:
    if isinstance(fit, FitResult):
        return fit.beta_hat
    return np.asarray(fit, dtype=float).reshape(-1)


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ParameterDomainError(f"{name} must be positive and finite", {name: value})


def select_lambda(sigma: float, tau: float, n: int, p: int) -> float:
    """
    λ = 2σ√(τ·log p / n)

    With sub-Gaussian noise this exceeds 2‖Xᵀε‖∞/n with probability at least
    1 − 2·p^{−(τ−2)/2}.
    """
    if tau < 2:
        raise ParameterDomainError("tau must be at least 2", {"tau": tau})
    if n < 1 or p < 2:
        raise ParameterDomainError("select_lambda needs n >= 1 and p >= 2", {"n": n, "p": p})
    if not (math.isfinite(sigma) and sigma >= 0):
        raise ParameterDomainError("sigma must be finite and nonnegative", {"sigma": sigma})
    return 2.0 * sigma * math.sqrt(tau * math.log(p) / n)


def check_estimation_bound(fit: Estimate, truth: SyntheticTruth, lambda_: float, gamma: float) -> BoundReport:
    """‖β̂ − β*‖₂ against (5/(2γ))·λ·√s"""
    _require_positive("gamma", gamma)
    observed = float(np.linalg.norm(_coefficients(fit) - truth.beta_star))
    bound = 5.0 / (2.0 * gamma) * lambda_ * math.sqrt(truth.s)
    return BoundReport.compare(observed, bound)


def check_prediction_bound(
    problem: Problem,
    fit: Estimate,
    truth: SyntheticTruth,
    lambda_: float,
    gamma: float,
) -> BoundReport:
    """
    ‖X(β* − β̂)‖²/n against (5λ/2)²·|S|/γ

    The variant with √|S| in place of |S| is carried as stated_bound.
    """
    _require_positive("gamma", gamma)
    beta_hat = check_coefficients(problem, _coefficients(fit))
    fitted_gap = problem.design @ (truth.beta_star - beta_hat)
    observed = float(fitted_gap @ fitted_gap) / problem.n
    scale = (5.0 * lambda_ / 2.0) ** 2 / gamma
    return BoundReport.compare(observed, scale * truth.s, stated_bound=scale * math.sqrt(truth.s))


def check_glm_bound(
    fit: Estimate,
    truth: SyntheticTruth,
    lambda_: float,
    gamma: float,
    eta_minus: float,
    c: float,
) -> BoundReport:
    """
    ‖β̂ − β*‖₂ against (4+c)λ/(2(γ − η⁻))·√|S|

    stated_bound is the c = 1/4 form 17λ/(8(γ − η⁻))·√|S|.

    Raises:
        RegimeError: γ ≤ η⁻
    """
    if not 0 < c < 1:
        raise ParameterDomainError("c must lie in (0, 1)", {"c": c})
    margin = gamma - eta_minus
    if not margin > 0:
        raise RegimeError(
            "restricted strong convexity constant does not exceed the penalty curvature",
            {"gamma": gamma, "eta_minus": eta_minus},
        )
    observed = float(np.linalg.norm(_coefficients(fit) - truth.beta_star))
    root_s = math.sqrt(truth.s)
    bound = (4.0 + c) * lambda_ / (2.0 * margin) * root_s
    stated = (4.0 + STATED_GLM_C) * lambda_ / (2.0 * margin) * root_s
    return BoundReport.compare(observed, bound, stated_bound=stated)


def oracle_linf_bound(sigma: float, gram_min: float, s: int, n: int, constant: float = ORACLE_LINF_CONSTANT) -> float:
    """C·σ·√(2/γ_S)·√(log s / n)"""
    _require_positive("gram_min", gram_min)
    return constant * sigma * math.sqrt(2.0 / gram_min) * math.sqrt(math.log(s) / n)


def existence_ball(truth: SyntheticTruth, lambda_: float, c: float, spec: PenaltySpec) -> float:
    """
    Radius r = cλ√|S| ∧ r₀ with r₀ = inf{t ≥ 0 : h'_λ(t) ≥ (1 − c)λ}

    r₀ is +inf when h'_λ never reaches (1 − c)λ, as for ℓ1.
    """
    if not 0 < c <= 1:
        raise ParameterDomainError("c must lie in (0, 1]", {"c": c})
    _require_positive("lambda", lambda_)
    scaled = spec.with_lambda(lambda_)
    target = (1.0 - c) * lambda_
    radius = c * lambda_ * math.sqrt(truth.s)
    return min(radius, _generalized_inverse(scaled, target))


def _generalized_inverse(spec: PenaltySpec, target: float) -> float:
    def gap(t: float) -> float:
        return float(h_derivative(spec, t)) - target

    if gap(0.0) >= 0:
        return 0.0
    upper = max(spec.lam, 1.0)
    for _ in range(200):
        if gap(upper) >= 0:
            return float(optimize.brentq(gap, 0.0, upper, xtol=1e-14, rtol=1e-12))
        upper *= 2.0
    return math.inf


def check_rsc_composite(
    problem: Problem,
    spec: PenaltySpec,
    beta1: np.ndarray,
    beta2: np.ndarray,
    re_gamma: float,
    eta_minus: float,
) -> float:
    """
    Margin of f(β₂) ≥ f(β₁) + ∇f(β₁)ᵀ(β₂ − β₁) + ((γ − η⁻)/2)‖β₂ − β₁‖² for f = L_n − Σh_λ

    A negative margin is a violation.

    Raises:
        RegimeError: γ ≤ η⁻
    """
    if not re_gamma > eta_minus:
        raise RegimeError("re_gamma must exceed eta_minus", {"re_gamma": re_gamma, "eta_minus": eta_minus})
    beta1 = check_coefficients(problem, beta1)
    beta2 = check_coefficients(problem, beta2)

    first = loss_eval(problem, beta1)
    value1 = first.value - float(np.sum(h_value(spec, beta1)))
    gradient1 = first.gradient - np.asarray(h_derivative(spec, beta1), dtype=float)
    value2 = loss_eval(problem, beta2).value - float(np.sum(h_value(spec, beta2)))

    step = beta2 - beta1
    curvature = (re_gamma - eta_minus) / 2.0 * float(step @ step)
    return value2 - value1 - float(gradient1 @ step) - curvature


@dataclass(frozen=True)
class GlmAudit:
    gradient_norm: float
    gradient_condition: bool
    derivative_max: float
    derivative_condition: bool

    @property
    def passed(self) -> bool:
        return self.gradient_condition and self.derivative_condition


def audit_glm_assumptions(
    problem: Problem,
    spec: PenaltySpec,
    beta_hat: np.ndarray,
    truth: SyntheticTruth,
    lambda_: float,
    c: float,
) -> GlmAudit:
    """‖∇L(β*)‖∞ ≤ λ/8 and max_{j ∉ S} |h'_λ(β̂_j)| ≤ (1 − c)λ"""
    if not 0 < c < 1:
        raise ParameterDomainError("c must lie in (0, 1)", {"c": c})
    beta_hat = check_coefficients(problem, beta_hat)
    gradient_norm = float(np.max(np.abs(loss_eval(problem, truth.beta_star).gradient)))

    outside = np.ones(problem.p, dtype=bool)
    outside[truth.support] = False
    derivatives = np.abs(np.asarray(h_derivative(spec.with_lambda(lambda_), beta_hat[outside]), dtype=float))
    derivative_max = float(np.max(derivatives)) if derivatives.size else 0.0

    return GlmAudit(
        gradient_norm=gradient_norm,
        gradient_condition=gradient_norm <= lambda_ / 8.0,
        derivative_max=derivative_max,
        derivative_condition=derivative_max <= (1.0 - c) * lambda_,
    )
