"""
Weighted-ℓ1 subproblem

    minimize  L_n(β) + Σ_i w_i|β_i|

Squared loss is solved by cyclic coordinate descent, alternating full sweeps with
sweeps over the active set. Logistic loss is solved by accelerated proximal
gradient with backtracking and objective-based restarts.
"""
from dataclasses import dataclass

import numpy as np

from dcsparse.exceptions import ParameterDomainError
from dcsparse.losses import LossKind, Problem, check_coefficients, loss_eval, loss_value
from dcsparse.logging import get_logger
from dcsparse.solver.config import SolverConfig

logger = get_logger(__name__)

BACKTRACK_FACTOR = 2.0


@dataclass(frozen=True)
class InnerSolution:
    beta: np.ndarray
    iterations: int
    converged: bool
    kkt_residual: float


def soft_threshold(z, w):
    """S(z, w) = sign(z)·max(|z| − w, 0)"""
    return np.sign(z) * np.maximum(np.abs(z) - w, 0.0)


def weighted_kkt_residual(gradient: np.ndarray, beta: np.ndarray, weights: np.ndarray, usable: np.ndarray) -> float:
    on_support = np.abs(gradient + weights * np.sign(beta))
    off_support = np.maximum(0.0, np.abs(gradient) - weights)
    residuals = np.where(beta != 0, on_support, off_support)
    residuals = residuals[usable]
    return float(np.max(residuals)) if residuals.size else 0.0


def surrogate_value(problem: Problem, beta: np.ndarray, weights: np.ndarray) -> float:
    return loss_value(problem, beta) + float(weights @ np.abs(beta))


def _coordinate_descent(problem: Problem, weights: np.ndarray, beta: np.ndarray, config: SolverConfig) -> InnerSolution:
    X = np.asfortranarray(problem.design)
    y, n = problem.response, problem.n
    norms = problem.column_norms
    usable = norms > 0
    columns = np.flatnonzero(usable)
    tol = config.inner_tol

    residual = y - X @ beta

    def sweep(indices: np.ndarray) -> float:
        nonlocal residual
        largest = 0.0
        for j in indices:
            column = X[:, j]
            old = beta[j]
            z = column @ residual / n + norms[j] * old
            new = np.sign(z) * max(abs(z) - weights[j], 0.0) / norms[j]
            if new != old:
                residual -= (new - old) * column
                beta[j] = new
                largest = max(largest, norms[j] * abs(new - old))
        return largest

    iterations = 0
    kkt = np.inf
    while iterations < config.max_inner_iters:
        sweep(columns)
        iterations += 1
        residual = y - X @ beta
        gradient = -(X.T @ residual) / n
        kkt = weighted_kkt_residual(gradient, beta, weights, usable)
        if kkt <= tol:
            return InnerSolution(beta, iterations, True, kkt)

        active = columns[beta[columns] != 0]
        while iterations < config.max_inner_iters:
            change = sweep(active)
            iterations += 1
            if change <= tol:
                break

    return InnerSolution(beta, iterations, False, kkt)


def _proximal_gradient(problem: Problem, weights: np.ndarray, beta: np.ndarray, config: SolverConfig) -> InnerSolution:
    usable = problem.column_norms > 0
    tol = config.inner_tol

    # ψ'' ≤ 1/4, so the loss gradient is Lipschitz with constant at most ‖X‖²/(4n)
    lipschitz = max(float(np.max(problem.column_norms)) / 4.0, 1e-12)

    current = beta.copy()
    momentum_point = beta.copy()
    t = 1.0
    best = beta.copy()
    best_value = surrogate_value(problem, best, weights)
    previous_value = best_value
    kkt = np.inf

    for iteration in range(1, config.max_inner_iters + 1):
        evaluation = loss_eval(problem, momentum_point)
        while True:
            step = 1.0 / lipschitz
            candidate = soft_threshold(momentum_point - step * evaluation.gradient, step * weights)
            candidate = np.where(usable, candidate, beta)
            diff = candidate - momentum_point
            upper = evaluation.value + evaluation.gradient @ diff + lipschitz / 2.0 * (diff @ diff)
            if loss_value(problem, candidate) <= upper + 1e-15 * abs(upper):
                break
            lipschitz *= BACKTRACK_FACTOR

        value = surrogate_value(problem, candidate, weights)
        if value <= best_value:
            best, best_value = candidate, value

        candidate_eval = loss_eval(problem, candidate)
        kkt = weighted_kkt_residual(candidate_eval.gradient, candidate, weights, usable)
        if kkt <= tol:
            return InnerSolution(candidate, iteration, True, kkt)

        if value > previous_value:
            # restart momentum
            t = 1.0
            momentum_point = candidate
        else:
            t_next = (1.0 + np.sqrt(1.0 + 4.0 * t * t)) / 2.0
            momentum_point = candidate + ((t - 1.0) / t_next) * (candidate - current)
            t = t_next
        current = candidate
        previous_value = value

    best_kkt = weighted_kkt_residual(loss_eval(problem, best).gradient, best, weights, usable)
    return InnerSolution(best, config.max_inner_iters, False, best_kkt)


def weighted_l1_solve(
    problem: Problem,
    weights: np.ndarray,
    warm_start: np.ndarray,
    config: SolverConfig,
) -> InnerSolution:
    """
    Minimize L_n(β) + Σ w_i|β_i| starting from warm_start

    Coordinates of all-zero columns stay at their warm-start value. When the
    iteration cap is hit the best iterate found is returned with converged=False.

    Example:
        solution = weighted_l1_solve(problem, np.full(problem.p, 0.1), np.zeros(problem.p), SolverConfig())
        solution.beta, solution.converged
    """
    weights = check_coefficients(problem, weights)
    if np.any(weights < 0) or not np.all(np.isfinite(weights)):
        raise ParameterDomainError("weights must be finite and nonnegative")
    beta = check_coefficients(problem, warm_start).copy()

    if problem.loss is LossKind.SQUARED:
        solution = _coordinate_descent(problem, weights, beta, config)
    else:
        solution = _proximal_gradient(problem, weights, beta, config)

    if not solution.converged:
        logger.debug(
            "Inner solver hit its iteration cap",
            extra={"extra_data": {"iterations": solution.iterations, "kkt_residual": solution.kkt_residual}},
        )
    return solution
