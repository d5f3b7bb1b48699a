"""
DCA outer loop for F(β) = L_n(β) + λ‖β‖₁ − Σ h_λ(β_i)

Each outer step linearizes h_λ at the current iterate and solves the weighted-ℓ1
problem with w_i = λ − h'_λ(|β_i|). The objective is nonincreasing along the
iterates because each step minimizes a majorizer of F.
"""
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import pandas as pd

from dcsparse.exceptions import NumericalFailureError, ShapeError
from dcsparse.logging import get_logger
from dcsparse.losses import Problem, check_coefficients, loss_value
from dcsparse.penalties import PenaltyFamily, PenaltySpec, h_derivative, penalty_value
from dcsparse.solver.config import InitKind, SolverConfig
from dcsparse.solver.inner import weighted_l1_solve
from dcsparse.stationarity import StationarityReport, check_d_stationary

logger = get_logger(__name__)


@dataclass(frozen=True)
class FitResult:
    beta_hat: np.ndarray
    objective_trace: List[float]
    outer_iters: int
    inner_iters_total: int
    converged: bool
    inner_converged: bool
    weights_final: np.ndarray
    stationarity: StationarityReport = field(repr=False)

    @property
    def fully_converged(self) -> bool:
        return self.converged and self.inner_converged

    def trace_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "iteration": np.arange(len(self.objective_trace)),
            "objective": self.objective_trace,
        })


def objective_value(problem: Problem, spec: PenaltySpec, beta: np.ndarray) -> float:
    """F(β) = L_n(β) + Σ p_λ(β_i)"""
    beta = check_coefficients(problem, beta)
    return loss_value(problem, beta) + float(np.sum(penalty_value(spec, beta)))


def dca_weights(spec: PenaltySpec, beta: np.ndarray) -> np.ndarray:
    """w_i = λ − h'_λ(|β_i|), clipped into [0, λ]"""
    h_prime = np.abs(np.asarray(h_derivative(spec, beta), dtype=float))
    return np.clip(spec.lam - h_prime, 0.0, spec.lam)


def relative_step(previous: np.ndarray, current: np.ndarray) -> float:
    """max_i min(|Δ_i|, |Δ_i / β_i|), using |Δ_i| alone where the previous β_i is 0"""
    delta = np.abs(current - previous)
    scale = np.abs(previous)
    ratio = np.divide(delta, scale, out=delta.copy(), where=scale > 0)
    return float(np.max(np.minimum(delta, ratio))) if delta.size else 0.0


def _initial_point(problem: Problem, spec: PenaltySpec, config: SolverConfig):
    if config.init is InitKind.ZERO:
        return np.zeros(problem.p), 0
    if config.init is InitKind.CUSTOM:
        beta = np.asarray(config.initial_beta, dtype=float)
        if beta.shape[0] != problem.p:
            raise ShapeError(
                "initial_beta length must equal the number of predictors",
                {"expected": problem.p, "got": beta.shape[0]},
            )
        return beta.copy(), 0
    warm = weighted_l1_solve(problem, np.full(problem.p, spec.lam), np.zeros(problem.p), config)
    return warm.beta, warm.iterations


def _check_finite(value: float, trace: List[float]) -> None:
    if not np.isfinite(value):
        raise NumericalFailureError(
            "objective became non-finite",
            {"trace": list(trace), "outer_iteration": len(trace) - 1},
        )


def dca_fit(problem: Problem, spec: PenaltySpec, config: Optional[SolverConfig] = None) -> FitResult:
    """
    Fit a DC-penalized estimator by iterated weighted-ℓ1 solves

    Stops when relative_step ≤ outer_tol or after max_outer_iters. ℓ1 penalties
    have constant weights, so one outer iteration already solves the problem.

    Example:
        spec = PenaltySpec(family="scad", lam=0.3, shape=3.7)
        fit = dca_fit(problem, spec)
        fit.beta_hat, fit.converged, fit.stationarity.max_violation

    Raises:
        NumericalFailureError: objective became NaN or infinite
    """
    config = config or SolverConfig()
    beta, inner_total = _initial_point(problem, spec, config)

    trace = [objective_value(problem, spec, beta)]
    _check_finite(trace[-1], trace)

    converged = False
    inner_converged = True
    weights = dca_weights(spec, beta)
    outer = 0

    while outer < config.max_outer_iters:
        outer += 1
        weights = dca_weights(spec, beta)
        inner = weighted_l1_solve(problem, weights, beta, config)
        inner_total += inner.iterations
        inner_converged = inner_converged and inner.converged

        step = relative_step(beta, inner.beta)
        beta = inner.beta
        trace.append(objective_value(problem, spec, beta))
        _check_finite(trace[-1], trace)

        logger.debug(
            "DCA outer iteration",
            extra={"extra_data": {"iteration": outer, "objective": trace[-1], "step": step}},
        )
        if spec.family is PenaltyFamily.L1 or step <= config.outer_tol:
            converged = True
            break

    if not converged:
        logger.warning(
            "DCA stopped at the outer iteration cap",
            extra={"extra_data": {"max_outer_iters": config.max_outer_iters, "family": spec.family.value}},
        )

    report = check_d_stationary(problem, spec, beta)
    logger.info(
        "DCA fit finished",
        extra={"extra_data": {
            "family": spec.family.value,
            "lambda": spec.lam,
            "outer_iters": outer,
            "inner_iters": inner_total,
            "converged": converged,
            "nonzeros": int(np.count_nonzero(beta)),
        }},
    )

    return FitResult(
        beta_hat=beta,
        objective_trace=trace,
        outer_iters=outer,
        inner_iters_total=inner_total,
        converged=converged,
        inner_converged=inner_converged,
        weights_final=weights,
        stationarity=report,
    )
