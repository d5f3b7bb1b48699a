"""
Cones of approximately sparse directions and restricted eigenvalue estimates

    C = { v : ‖v_{S^c}‖₁ ≤ ratio·‖v_S‖₁ }

The ratio is 5/(2c) for linear models and (4+c)/c for GLMs.
"""
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from dcsparse.data import make_rng
from dcsparse.exceptions import ParameterDomainError
from dcsparse.losses import Problem, curvature_weights

SAMPLE_BATCH = 512


class ConeRegime(str, Enum):
    LINEAR = "linear"
    GLM = "glm"


class ConeSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    support: Tuple[int, ...]
    c: float
    regime: ConeRegime = ConeRegime.LINEAR

    @model_validator(mode="after")
    def _check_domain(self) -> "ConeSpec":
        if not 0 < self.c <= 1:
            raise ParameterDomainError("cone parameter c must lie in (0, 1]", {"c": self.c})
        if len(self.support) == 0:
            raise ParameterDomainError("cone support must be nonempty")
        if len(set(self.support)) != len(self.support) or min(self.support) < 0:
            raise ParameterDomainError("cone support must hold distinct nonnegative indices")
        return self

    @classmethod
    def build(cls, support, c: float, regime: ConeRegime = ConeRegime.LINEAR) -> "ConeSpec":
        return cls(support=tuple(int(i) for i in np.asarray(support).reshape(-1)), c=c, regime=regime)

    @property
    def ratio(self) -> float:
        if self.regime is ConeRegime.LINEAR:
            return 5.0 / (2.0 * self.c)
        return (4.0 + self.c) / self.c

    def split(self, p: int) -> Tuple[np.ndarray, np.ndarray]:
        if max(self.support) >= p:
            raise ParameterDomainError("cone support index out of range", {"p": p})
        inside = np.zeros(p, dtype=bool)
        inside[list(self.support)] = True
        return np.flatnonzero(inside), np.flatnonzero(~inside)


def cone_membership(v: np.ndarray, cone: ConeSpec) -> bool:
    v = np.asarray(v, dtype=float).reshape(-1)
    inside, outside = cone.split(v.shape[0])
    return bool(np.sum(np.abs(v[outside])) <= cone.ratio * np.sum(np.abs(v[inside])))


def sample_cone_directions(rng: np.random.Generator, cone: ConeSpec, p: int, samples: int) -> np.ndarray:
    """
    Unit-norm directions in the cone, one per row

    v_S is uniform on the sphere; v_{S^c} is a signed Dirichlet point scaled to
    ‖v_{S^c}‖₁ = u·ratio·‖v_S‖₁ with u uniform on [0, 1].
    """
    inside, outside = cone.split(p)
    directions = np.zeros((samples, p))

    on_support = rng.standard_normal((samples, inside.size))
    on_support /= np.linalg.norm(on_support, axis=1, keepdims=True)
    directions[:, inside] = on_support

    if outside.size:
        budget = rng.uniform(0.0, 1.0, samples) * cone.ratio * np.sum(np.abs(on_support), axis=1)
        simplex = rng.dirichlet(np.ones(outside.size), samples)
        signs = rng.choice(np.array([-1.0, 1.0]), size=(samples, outside.size))
        directions[:, outside] = signs * simplex * budget[:, None]

    return directions / np.linalg.norm(directions, axis=1, keepdims=True)


def estimate_re_constant(
    problem: Problem,
    cone: ConeSpec,
    samples: int,
    seed: int,
    beta: Optional[np.ndarray] = None,
) -> float:
    """
    Monte Carlo restricted eigenvalue γ̂ = min (1/n)‖W^{1/2}Xv‖² over sampled unit v ∈ C

    W is the identity for squared loss and diag(ψ''(Xβ)) for logistic loss (β = 0
    unless given). The coordinate directions e_j, j ∈ S, are always included. A
    minimum over samples can only overestimate the true constant.

    Example:
        cone = ConeSpec.build(truth.support, c=0.5)
        estimate_re_constant(problem, cone, samples=2000, seed=1)
    """
    if samples < 1:
        raise ParameterDomainError("samples must be at least 1", {"samples": samples})

    beta = np.zeros(problem.p) if beta is None else beta
    weights = curvature_weights(problem, beta)
    weighted = problem.design * np.sqrt(weights)[:, None]
    n = problem.n

    inside, _ = cone.split(problem.p)
    best = float(np.min(np.einsum("ij,ij->j", weighted[:, inside], weighted[:, inside]) / n))

    rng = make_rng(seed)
    remaining = samples
    while remaining > 0:
        batch = min(SAMPLE_BATCH, remaining)
        directions = sample_cone_directions(rng, cone, problem.p, batch)
        projected = weighted @ directions.T
        quadratic = np.einsum("ij,ij->j", projected, projected) / n
        best = min(best, float(np.min(quadratic)))
        remaining -= batch
    return max(best, 0.0)
