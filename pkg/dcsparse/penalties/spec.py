"""
Penalty specification types

A penalty is stored as its DC decomposition p_λ(t) = λ|t| − h_λ(t), where h_λ is the
convex correction. The family and (λ, shape) pin down h_λ completely.
"""
import math
from enum import Enum
from typing import FrozenSet, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from dcsparse.exceptions import ParameterDomainError


class PenaltyFamily(str, Enum):
    L1 = "l1"
    SCAD = "scad"
    MCP = "mcp"
    CAPPED_L1 = "capped-l1"
    TRANSFORMED_L1 = "transformed-l1"
    LOGARITHMIC = "log"


class Assumption(str, Enum):
    """Regularity conditions on h_λ"""

    BOUNDED_DERIVATIVE = "A3"   # sup |h'| ≤ λ
    SYMMETRIC = "A4"            # h(t) = h(−t)
    BOUNDED_CURVATURE = "A5"    # h' nondecreasing with slope in [η⁺, η⁻]
    ORIGIN = "A6"               # h(0) = h'(0) = 0
    FLAT_TAIL = "A7"            # h'(t) = λ for |t| ≥ ζ


SCALE_FREE_FAMILIES = frozenset({
    PenaltyFamily.L1,
    PenaltyFamily.SCAD,
    PenaltyFamily.MCP,
    PenaltyFamily.CAPPED_L1,
})

SHAPED_FAMILIES = frozenset({
    PenaltyFamily.SCAD,
    PenaltyFamily.MCP,
    PenaltyFamily.CAPPED_L1,
    PenaltyFamily.TRANSFORMED_L1,
})

DEFAULT_LOG_OFFSET = 1.0
DEFAULT_SMOOTHING_RATIO = 1e-3


class PenaltySpec(BaseModel):
    """
    Penalty family with λ and its shape knob

    shape is γ for SCAD/MCP/CappedL1, a for TransformedL1 and the log offset ε for
    Logarithmic (default 1). smooth/smoothing_width only apply to CappedL1; the width
    is dimensionless and defaults to 1e-3·γ.
    """

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    family: PenaltyFamily
    lam: float
    shape: Optional[float] = None
    smooth: bool = False
    smoothing_width: Optional[float] = None

    @model_validator(mode="after")
    def _check_domain(self) -> "PenaltySpec":
        family = self.family
        details = {"family": family.value, "lambda": self.lam, "shape": self.shape}

        if not math.isfinite(self.lam) or self.lam < 0:
            raise ParameterDomainError("lambda must be a finite nonnegative number", details)
        if self.lam == 0 and family is not PenaltyFamily.L1:
            raise ParameterDomainError("lambda must be positive for nonconvex families", details)

        if family in SHAPED_FAMILIES and self.shape is None:
            raise ParameterDomainError(f"{family.value} requires a shape parameter", details)
        if self.shape is not None and family is not PenaltyFamily.L1:
            if not math.isfinite(self.shape) or self.shape <= 0:
                raise ParameterDomainError("shape must be a finite positive number", details)
            if family is PenaltyFamily.SCAD and self.shape <= 1:
                raise ParameterDomainError("SCAD requires shape > 1", details)

        wants_smoothing = self.smooth or self.smoothing_width is not None
        if wants_smoothing and family is not PenaltyFamily.CAPPED_L1:
            raise ParameterDomainError("smoothing is only defined for capped-l1", details)
        if self.smoothing_width is not None:
            width = self.smoothing_width
            if not math.isfinite(width) or width <= 0 or width >= self.shape:
                raise ParameterDomainError("smoothing_width must lie in (0, gamma)", details)
        return self

    @property
    def gamma(self) -> float:
        return float(self.shape)

    @property
    def log_offset(self) -> float:
        return DEFAULT_LOG_OFFSET if self.shape is None else float(self.shape)

    @property
    def width(self) -> float:
        """Dimensionless smoothing width μ of the capped-ℓ1 kink"""
        if self.smoothing_width is not None:
            return float(self.smoothing_width)
        return DEFAULT_SMOOTHING_RATIO * self.gamma

    @property
    def is_scale_free(self) -> bool:
        return self.family in SCALE_FREE_FAMILIES

    def with_lambda(self, lam: float) -> "PenaltySpec":
        return self.model_copy(update={"lam": float(lam)})


class DcProfile(BaseModel):
    """
    Curvature bounds, unbiasedness threshold and satisfied assumptions of h_λ

    eta_minus may be +inf (unsmoothed capped-ℓ1); zeta is None exactly when the
    flat-tail condition fails.
    """

    model_config = ConfigDict(frozen=True)

    eta_minus: float
    eta_plus: float = 0.0
    zeta: Optional[float] = None
    assumptions_satisfied: FrozenSet[Assumption]

    @model_validator(mode="after")
    def _check_profile(self) -> "DcProfile":
        if self.eta_plus > self.eta_minus:
            raise ParameterDomainError("eta_plus must not exceed eta_minus")
        has_tail = Assumption.FLAT_TAIL in self.assumptions_satisfied
        if has_tail != (self.zeta is not None):
            raise ParameterDomainError("zeta must be set exactly when the flat-tail condition holds")
        return self
