from dcsparse.losses.problem import (
    LossEval,
    LossKind,
    Problem,
    check_coefficients,
    curvature_weights,
    logistic_cumulant,
    logistic_mean,
    loss_eval,
    loss_gradient,
    loss_value,
)

__all__ = [
    "LossEval",
    "LossKind",
    "Problem",
    "check_coefficients",
    "curvature_weights",
    "logistic_cumulant",
    "logistic_mean",
    "loss_eval",
    "loss_gradient",
    "loss_value",
]
