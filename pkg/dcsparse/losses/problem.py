"""
Estimation instances and their empirical losses

Squared error:  L_n(β) = (1/2n)‖y − Xβ‖²
Logistic:       L_n(β) = (1/n)Σ ψ(x_iᵀβ) − y_i x_iᵀβ,  ψ(u) = log(1 + eᵘ)
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

import numpy as np
from scipy.special import expit

from dcsparse.exceptions import ResponseDomainError, ShapeError


class LossKind(str, Enum):
    SQUARED = "squared"
    LOGISTIC = "logistic"


@dataclass(frozen=True)
class Problem:
    """
    Design X (n×p), response y (n) and the loss tying them together

    Arrays are copied to C-contiguous float64 and made read-only, so a Problem
    can be shared across threads and processes.
    """

    design: np.ndarray
    response: np.ndarray
    loss: LossKind = LossKind.SQUARED
    column_norms: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        design = np.array(self.design, dtype=float, order="C", ndmin=2)
        response = np.array(self.response, dtype=float).reshape(-1)
        loss = LossKind(self.loss)

        if design.ndim != 2:
            raise ShapeError("design must be a matrix", {"ndim": design.ndim})
        n, p = design.shape
        if n < 1 or p < 1:
            raise ShapeError("design needs at least one row and one column", {"n": n, "p": p})
        if response.shape[0] != n:
            raise ShapeError(
                "design row count must equal response length",
                {"rows": n, "response_length": response.shape[0]},
            )
        if not (np.all(np.isfinite(design)) and np.all(np.isfinite(response))):
            raise ShapeError("design and response must be finite")
        if loss is LossKind.LOGISTIC and not np.all((response == 0.0) | (response == 1.0)):
            raise ResponseDomainError("logistic loss requires a binary 0/1 response")

        norms = np.einsum("ij,ij->j", design, design) / n
        for array in (design, response, norms):
            array.setflags(write=False)

        object.__setattr__(self, "design", design)
        object.__setattr__(self, "response", response)
        object.__setattr__(self, "loss", loss)
        object.__setattr__(self, "column_norms", norms)

    @property
    def n(self) -> int:
        return self.design.shape[0]

    @property
    def p(self) -> int:
        return self.design.shape[1]

    def with_response(self, response: np.ndarray) -> "Problem":
        return Problem(self.design, response, self.loss)


@dataclass(frozen=True)
class LossEval:
    value: float
    gradient: np.ndarray


def logistic_cumulant(u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """ψ(u) = log(1 + eᵘ), evaluated as max(u, 0) + log1p(e^{−|u|})"""
    u = np.asarray(u, dtype=float)
    values = np.maximum(u, 0.0) + np.log1p(np.exp(-np.abs(u)))
    return float(values) if values.ndim == 0 else values


def logistic_mean(u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """ψ'(u) = 1 / (1 + e^{−u})"""
    values = expit(np.asarray(u, dtype=float))
    return float(values) if np.ndim(values) == 0 else values


def check_coefficients(problem: Problem, beta: np.ndarray) -> np.ndarray:
    beta = np.asarray(beta, dtype=float).reshape(-1)
    if beta.shape[0] != problem.p:
        raise ShapeError(
            "coefficient vector length must equal the number of predictors",
            {"expected": problem.p, "got": beta.shape[0]},
        )
    return beta


def loss_eval(problem: Problem, beta: np.ndarray) -> LossEval:
    """
    L_n(β) and ∇L_n(β)

    Example:
        problem = Problem(X, y)
        evaluation = loss_eval(problem, np.zeros(problem.p))
        evaluation.value, evaluation.gradient
    """
    beta = check_coefficients(problem, beta)
    X, y, n = problem.design, problem.response, problem.n
    eta = X @ beta

    if problem.loss is LossKind.SQUARED:
        residual = y - eta
        value = float(residual @ residual) / (2.0 * n)
        gradient = -(X.T @ residual) / n
    else:
        value = float(np.sum(logistic_cumulant(eta) - y * eta)) / n
        gradient = X.T @ (expit(eta) - y) / n

    return LossEval(value=value, gradient=gradient)


def loss_value(problem: Problem, beta: np.ndarray) -> float:
    return loss_eval(problem, beta).value


def loss_gradient(problem: Problem, beta: np.ndarray) -> np.ndarray:
    return loss_eval(problem, beta).gradient


def curvature_weights(problem: Problem, beta: np.ndarray) -> np.ndarray:
    """Per-observation second derivative of the loss: ψ''(x_iᵀβ) for logistic, ones for squared"""
    if problem.loss is LossKind.SQUARED:
        return np.ones(problem.n)
    beta = check_coefficients(problem, beta)
    mean = expit(problem.design @ beta)
    return mean * (1.0 - mean)
