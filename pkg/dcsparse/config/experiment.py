"""
Experiment files: flat `key = value` text validated into an ExperimentConfig

Example file:
    # SCAD support recovery
    experiment = support
    n = 200
    p = 400
    s = 5
    penalty = scad
    gamma = 3.7
    tau = 3
    replicates = 100
    seed = 2024
    out = runs/scad.csv
"""
import math
from pathlib import Path
from typing import Dict, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from dcsparse.data import NoiseKind, SyntheticSpec
from dcsparse.exceptions import ParameterDomainError, ParseError
from dcsparse.losses import LossKind
from dcsparse.penalties import PenaltyFamily, PenaltySpec
from dcsparse.solver import InitKind, SolverConfig
from dcsparse.theory.bounds import select_lambda
from dcsparse.utils import read_text


def parse_key_value_text(text: str) -> Dict[str, str]:
    """
    Parse `key = value` lines; blank lines and `#` comments are skipped

    Raises:
        ParseError: a line without '=', an empty key or a repeated key
    """
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", {"line": number})
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ParseError("empty key", {"line": number})
        if key in values:
            raise ParseError(f"duplicate key {key!r}", {"line": number})
        values[key] = value
    return values


class ExperimentConfig(BaseModel):
    """
    One experiment: instance recipe, penalty, solver settings and replicate count

    Exactly one of `lambda` and `tau` must be given; with `tau` the penalty level is
    2σ√(τ·log p / n). The loss defaults to logistic for the glm experiment and to
    squared otherwise.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    experiment: Literal["support", "glm", "oracle"] = "support"

    # instance
    n: int
    p: int
    s: int
    signal_min: float = 1.0
    signal_max: float = 1.0
    sigma: float = 1.0
    design_correlation: float = 0.0
    noise: NoiseKind = NoiseKind.GAUSSIAN
    loss: Optional[LossKind] = None
    standardize: Optional[bool] = None
    column_scale: float = 1.0

    # penalty
    penalty: PenaltyFamily = PenaltyFamily.SCAD
    lambda_: Optional[float] = Field(default=None, alias="lambda")
    tau: Optional[float] = None
    gamma: Optional[float] = None
    a: Optional[float] = None
    offset: Optional[float] = None
    smooth: bool = False

    # run
    replicates: int = 1
    seed: int = 0
    out: Optional[str] = None
    c: Optional[float] = None
    re_samples: int = 2000

    # solver
    outer_tol: float = 1e-8
    inner_tol: float = 1e-10
    max_outer: int = 100
    max_inner: int = 100_000
    init: InitKind = InitKind.LASSO

    @model_validator(mode="after")
    def _check_config(self) -> "ExperimentConfig":
        if self.replicates < 1:
            raise ParameterDomainError("replicates must be at least 1", {"replicates": self.replicates})
        if (self.lambda_ is None) == (self.tau is None):
            raise ParameterDomainError("give exactly one of 'lambda' and 'tau'")
        if self.re_samples < 1:
            raise ParameterDomainError("re_samples must be at least 1", {"re_samples": self.re_samples})
        if self.init is InitKind.CUSTOM:
            raise ParameterDomainError("experiments support the zero and lasso inits only")
        # build the nested specs once so that their domain errors surface here
        self.synthetic_spec()
        self.penalty_spec()
        self.solver_config()
        return self

    @property
    def resolved_loss(self) -> LossKind:
        if self.loss is not None:
            return self.loss
        return LossKind.LOGISTIC if self.experiment == "glm" else LossKind.SQUARED

    def synthetic_spec(self) -> SyntheticSpec:
        return SyntheticSpec(
            n=self.n,
            p=self.p,
            s=self.s,
            signal_min=self.signal_min,
            signal_max=self.signal_max,
            sigma=self.sigma,
            design_correlation=self.design_correlation,
            noise=self.noise,
            loss=self.resolved_loss,
            seed=self.seed,
            standardize=self.standardize,
            column_scale=self.column_scale,
        )

    def resolved_lambda(self) -> float:
        if self.lambda_ is not None:
            return self.lambda_
        return select_lambda(self.sigma, self.tau, self.n, self.p)

    def penalty_spec(self) -> PenaltySpec:
        return build_penalty_spec(
            self.penalty, self.resolved_lambda(), gamma=self.gamma, a=self.a, offset=self.offset, smooth=self.smooth
        )

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            outer_tol=self.outer_tol,
            inner_tol=self.inner_tol,
            max_outer_iters=self.max_outer,
            max_inner_iters=self.max_inner,
            init=self.init,
        )


def build_penalty_spec(
    family: Union[PenaltyFamily, str],
    lam: float,
    gamma: Optional[float] = None,
    a: Optional[float] = None,
    offset: Optional[float] = None,
    smooth: bool = False,
) -> PenaltySpec:
    """Map the family-specific knobs (--gamma, --a, --offset) onto PenaltySpec.shape"""
    family = PenaltyFamily(family)
    if family is PenaltyFamily.TRANSFORMED_L1:
        shape = a
    elif family is PenaltyFamily.LOGARITHMIC:
        shape = offset
    elif family is PenaltyFamily.L1:
        shape = None
    else:
        shape = gamma
    if not math.isfinite(lam):
        raise ParameterDomainError("lambda must be finite", {"lambda": lam})
    return PenaltySpec(family=family, lam=lam, shape=shape, smooth=smooth)


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(piece) for piece in item["loc"]) or "config"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def load_experiment_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and validate an experiment file

    Raises:
        ParseError: malformed lines
        ParameterDomainError: unknown keys, bad values or invalid nested specs
    """
    values = parse_key_value_text(read_text(path))
    try:
        return ExperimentConfig.model_validate(values)
    except ValidationError as exc:
        fields = sorted({str(item["loc"][0]) for item in exc.errors() if item["loc"]})
        raise ParameterDomainError(f"invalid experiment config: {_describe(exc)}", {"fields": fields}) from exc
