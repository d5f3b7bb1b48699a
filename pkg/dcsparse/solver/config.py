"""
Solver settings shared by the outer DCA loop and the weighted-ℓ1 inner solvers
"""
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from dcsparse.exceptions import ParameterDomainError


class InitKind(str, Enum):
    ZERO = "zero"
    LASSO = "lasso"
    CUSTOM = "custom"


class SolverConfig(BaseModel):
    """
    Tolerances, iteration caps and the starting point of dca_fit

    initial_beta is required for (and only used by) the custom init.
    """

    model_config = ConfigDict(frozen=True)

    outer_tol: float = Field(1e-8, gt=0)
    inner_tol: float = Field(1e-10, gt=0)
    max_outer_iters: int = Field(100, ge=1)
    max_inner_iters: int = Field(100_000, ge=1)
    init: InitKind = InitKind.LASSO
    initial_beta: Optional[Tuple[float, ...]] = None

    @model_validator(mode="after")
    def _check_init(self) -> "SolverConfig":
        if self.init is InitKind.CUSTOM and self.initial_beta is None:
            raise ParameterDomainError("custom init requires initial_beta")
        if self.initial_beta is not None and not np.all(np.isfinite(self.initial_beta)):
            raise ParameterDomainError("initial_beta must be finite")
        return self

    @classmethod
    def custom(cls, beta: np.ndarray, **kwargs) -> "SolverConfig":
        values = tuple(float(v) for v in np.asarray(beta, dtype=float).reshape(-1))
        return cls(init=InitKind.CUSTOM, initial_beta=values, **kwargs)
