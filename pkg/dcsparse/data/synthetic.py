"""
Seeded synthetic sparse regression instances

    y = Xβ* + ε           (squared loss)
    y_i ~ Bernoulli(ψ'(x_iᵀβ*))   (logistic loss)

Rows of X are Gaussian with Toeplitz covariance ρ^|i−j|. All randomness comes from
one numpy Generator(Philox(seed)), drawn in a fixed order, so an instance is a pure
function of its SyntheticSpec.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy import linalg
from scipy.special import expit

from dcsparse.exceptions import ParameterDomainError
from dcsparse.logging import get_logger
from dcsparse.losses import LossKind, Problem

logger = get_logger(__name__)

MAX_SEED = 2 ** 64 - 1


class NoiseKind(str, Enum):
    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"


class SyntheticSpec(BaseModel):
    """
    Recipe for one synthetic instance

    standardize defaults to True for squared loss and False for logistic loss;
    column_scale multiplies every column after standardization.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    p: int
    s: int
    signal_min: float = 1.0
    signal_max: float = 1.0
    sigma: float = 1.0
    design_correlation: float = 0.0
    noise: NoiseKind = NoiseKind.GAUSSIAN
    loss: LossKind = LossKind.SQUARED
    seed: int = 0
    standardize: Optional[bool] = None
    column_scale: float = 1.0

    @model_validator(mode="after")
    def _check_domain(self) -> "SyntheticSpec":
        if self.n < 1 or self.p < 1:
            raise ParameterDomainError("n and p must be positive", {"n": self.n, "p": self.p})
        if not 1 <= self.s <= self.p:
            raise ParameterDomainError("sparsity s must lie in [1, p]", {"s": self.s, "p": self.p})
        if not (math.isfinite(self.signal_min) and math.isfinite(self.signal_max)):
            raise ParameterDomainError("signal range must be finite")
        if not 0 <= self.signal_min <= self.signal_max:
            raise ParameterDomainError(
                "signal range requires 0 <= signal_min <= signal_max",
                {"signal_min": self.signal_min, "signal_max": self.signal_max},
            )
        if not (math.isfinite(self.sigma) and self.sigma >= 0):
            raise ParameterDomainError("sigma must be finite and nonnegative", {"sigma": self.sigma})
        if not 0 <= self.design_correlation < 1:
            raise ParameterDomainError(
                "design_correlation must lie in [0, 1)", {"design_correlation": self.design_correlation}
            )
        if not 0 <= self.seed <= MAX_SEED:
            raise ParameterDomainError("seed must be an unsigned 64-bit integer", {"seed": self.seed})
        if not (math.isfinite(self.column_scale) and self.column_scale > 0):
            raise ParameterDomainError("column_scale must be positive", {"column_scale": self.column_scale})
        return self

    @property
    def standardized(self) -> bool:
        if self.standardize is None:
            return self.loss is LossKind.SQUARED
        return self.standardize

    def for_replicate(self, index: int) -> "SyntheticSpec":
        """Same recipe with seed XOR index"""
        return self.model_copy(update={"seed": replicate_seed(self.seed, index)})


@dataclass(frozen=True)
class SyntheticTruth:
    beta_star: np.ndarray
    support: np.ndarray
    sigma: float
    seed: int
    spec: Optional[SyntheticSpec] = None

    @property
    def s(self) -> int:
        return int(self.support.size)


def replicate_seed(base_seed: int, index: int) -> int:
    return int(base_seed) ^ int(index)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def toeplitz_design(rng: np.random.Generator, n: int, p: int, rho: float) -> np.ndarray:
    draws = rng.standard_normal((n, p))
    if rho == 0:
        return draws
    covariance = linalg.toeplitz(rho ** np.arange(p))
    factor = linalg.cholesky(covariance, lower=True)
    return draws @ factor.T


def standardize_columns(design: np.ndarray) -> np.ndarray:
    """Rescale columns to ‖x_j‖²/n = 1; all-zero columns are left untouched"""
    n = design.shape[0]
    norms = np.sqrt(np.einsum("ij,ij->j", design, design) / n)
    norms[norms == 0] = 1.0
    return design / norms


def generate(spec: SyntheticSpec) -> Tuple[Problem, SyntheticTruth]:
    """
    Draw (Problem, SyntheticTruth) from spec

    Example:
        problem, truth = generate(SyntheticSpec(n=100, p=50, s=3, sigma=0.5, seed=7))
    """
    rng = make_rng(spec.seed)

    design = toeplitz_design(rng, spec.n, spec.p, spec.design_correlation)
    if spec.standardized:
        design = standardize_columns(design)
    design = design * spec.column_scale

    support = np.sort(rng.choice(spec.p, size=spec.s, replace=False))
    magnitudes = rng.uniform(spec.signal_min, spec.signal_max, size=spec.s)
    signs = rng.choice(np.array([-1.0, 1.0]), size=spec.s)
    beta_star = np.zeros(spec.p)
    beta_star[support] = signs * magnitudes

    linear = design @ beta_star
    if spec.loss is LossKind.SQUARED:
        if spec.noise is NoiseKind.GAUSSIAN:
            noise = rng.standard_normal(spec.n)
        else:
            noise = rng.choice(np.array([-1.0, 1.0]), size=spec.n)
        response = linear + spec.sigma * noise
    else:
        response = (rng.random(spec.n) < expit(linear)).astype(float)

    logger.debug(
        "Generated synthetic instance",
        extra={"extra_data": {"n": spec.n, "p": spec.p, "s": spec.s, "seed": spec.seed}},
    )
    truth = SyntheticTruth(
        beta_star=beta_star,
        support=support,
        sigma=spec.sigma,
        seed=spec.seed,
        spec=spec,
    )
    return Problem(design, response, spec.loss), truth
