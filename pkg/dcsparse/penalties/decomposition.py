"""
Evaluation of DC penalties p_λ(t) = λ|t| − h_λ(t)

Every function accepts a scalar or an ndarray for t and returns the same kind.
Scale-free families (ℓ1, SCAD, MCP, capped-ℓ1) satisfy p_λ(t) = λ²p_1(t/λ); the
transformed-ℓ1 and logarithmic families use p_λ(t) = λ·p_1(t), which keeps |h'| ≤ λ.
"""
import math
from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd

from dcsparse.exceptions import ParameterDomainError, UnsupportedFamilyError
from dcsparse.penalties.spec import Assumption, DcProfile, PenaltyFamily, PenaltySpec

ArrayOrFloat = Union[float, np.ndarray]

ALL_ASSUMPTIONS = frozenset(Assumption)
WITHOUT_FLAT_TAIL = ALL_ASSUMPTIONS - {Assumption.FLAT_TAIL}
WITHOUT_CURVATURE = ALL_ASSUMPTIONS - {Assumption.BOUNDED_CURVATURE}


def _restore(values: np.ndarray, t) -> ArrayOrFloat:
    if np.ndim(t) == 0:
        return float(values)
    return values


def capped_window(spec: PenaltySpec) -> Tuple[float, float, float]:
    """(lo, kink, hi) of the capped-ℓ1 transition; lo == kink == hi when unsmoothed"""
    kink = spec.gamma * spec.lam / 2.0
    if not spec.smooth:
        return kink, kink, kink
    half = spec.width * spec.lam / 2.0
    return kink - half, kink, kink + half


def _h_abs(spec: PenaltySpec, a: np.ndarray) -> np.ndarray:
    lam = spec.lam
    family = spec.family

    if family is PenaltyFamily.L1:
        return np.zeros_like(a)

    if family is PenaltyFamily.SCAD:
        g = spec.gamma
        middle = (a - lam) ** 2 / (2.0 * (g - 1.0))
        tail = lam * a - (g + 1.0) * lam ** 2 / 2.0
        return np.where(a <= lam, 0.0, np.where(a < g * lam, middle, tail))

    if family is PenaltyFamily.MCP:
        g = spec.gamma
        return np.where(a < g * lam, a ** 2 / (2.0 * g), lam * a - g * lam ** 2 / 2.0)

    if family is PenaltyFamily.CAPPED_L1:
        lo, kink, hi = capped_window(spec)
        if not spec.smooth:
            return lam * np.maximum(0.0, a - kink)
        width = hi - lo
        ramp = lam * (a - lo) ** 2 / (2.0 * width)
        return np.where(a <= lo, 0.0, np.where(a < hi, ramp, lam * (a - kink)))

    if family is PenaltyFamily.TRANSFORMED_L1:
        shape = spec.gamma
        return lam * a ** 2 / (shape + a)

    # logarithmic
    eps = spec.log_offset
    return lam * (a - eps * np.log1p(a / eps))


def _h_prime_abs(spec: PenaltySpec, a: np.ndarray) -> np.ndarray:
    """h'_λ on the nonnegative half line"""
    lam = spec.lam
    family = spec.family

    if family is PenaltyFamily.L1:
        return np.zeros_like(a)

    if family is PenaltyFamily.SCAD:
        g = spec.gamma
        return np.where(a <= lam, 0.0, np.where(a < g * lam, (a - lam) / (g - 1.0), lam))

    if family is PenaltyFamily.MCP:
        g = spec.gamma
        return np.where(a < g * lam, a / g, lam)

    if family is PenaltyFamily.CAPPED_L1:
        lo, kink, hi = capped_window(spec)
        if not spec.smooth:
            # midpoint of the one-sided derivatives at the kink
            return np.where(a < kink, 0.0, np.where(a > kink, lam, lam / 2.0))
        width = hi - lo
        return np.where(a <= lo, 0.0, np.where(a < hi, lam * (a - lo) / width, lam))

    if family is PenaltyFamily.TRANSFORMED_L1:
        shape = spec.gamma
        return lam * a * (2.0 * shape + a) / (shape + a) ** 2

    eps = spec.log_offset
    return lam * a / (a + eps)


def _penalty_abs(spec: PenaltySpec, a: np.ndarray) -> np.ndarray:
    lam = spec.lam
    family = spec.family

    if family is PenaltyFamily.L1:
        return lam * a

    if family is PenaltyFamily.SCAD:
        g = spec.gamma
        middle = lam * a - (a - lam) ** 2 / (2.0 * (g - 1.0))
        flat = (g + 1.0) * lam ** 2 / 2.0
        return np.where(a <= lam, lam * a, np.where(a < g * lam, middle, flat))

    if family is PenaltyFamily.MCP:
        g = spec.gamma
        return np.where(a < g * lam, lam * a - a ** 2 / (2.0 * g), g * lam ** 2 / 2.0)

    if family is PenaltyFamily.CAPPED_L1:
        lo, kink, hi = capped_window(spec)
        if not spec.smooth:
            return lam * np.minimum(a, kink)
        return lam * a - _h_abs(spec, a)

    if family is PenaltyFamily.TRANSFORMED_L1:
        shape = spec.gamma
        return lam * shape * a / (shape + a)

    eps = spec.log_offset
    return lam * eps * np.log1p(a / eps)


def penalty_value(spec: PenaltySpec, t: ArrayOrFloat) -> ArrayOrFloat:
    """
    p_λ(t) = λ|t| − h_λ(t)

    Example:
        penalty_value(PenaltySpec(family="capped-l1", lam=1, shape=3), 5.0)  # 1.5
    """
    a = np.abs(np.asarray(t, dtype=float))
    return _restore(_penalty_abs(spec, a), t)


def h_value(spec: PenaltySpec, t: ArrayOrFloat) -> ArrayOrFloat:
    a = np.abs(np.asarray(t, dtype=float))
    return _restore(_h_abs(spec, a), t)


def h_derivative(spec: PenaltySpec, t: ArrayOrFloat) -> ArrayOrFloat:
    """h'_λ(t), an odd function of t; the capped-ℓ1 kink returns the subgradient midpoint"""
    arr = np.asarray(t, dtype=float)
    return _restore(np.sign(arr) * _h_prime_abs(spec, np.abs(arr)), t)


def h_directional_derivative(spec: PenaltySpec, t: ArrayOrFloat, d: ArrayOrFloat) -> ArrayOrFloat:
    """One-sided derivative of h_λ at t along d (exact at the unsmoothed capped-ℓ1 kink)"""
    arr = np.asarray(t, dtype=float)
    direction = np.asarray(d, dtype=float)
    values = h_derivative(spec, arr) * direction

    if spec.family is PenaltyFamily.CAPPED_L1 and not spec.smooth:
        _, kink, _ = capped_window(spec)
        at_kink = np.abs(arr) == kink
        outward = np.sign(arr) * direction > 0
        kink_values = np.where(outward, spec.lam * np.abs(direction), 0.0)
        values = np.where(at_kink, kink_values, values)
    return _restore(np.asarray(values, dtype=float), t)


def penalty_derivative(spec: PenaltySpec, t: ArrayOrFloat) -> ArrayOrFloat:
    """p'_λ(t) for t ≠ 0; 0 at the origin"""
    arr = np.asarray(t, dtype=float)
    a = np.abs(arr)
    return _restore(np.sign(arr) * (spec.lam - _h_prime_abs(spec, a)), t)


def dc_profile(spec: PenaltySpec) -> DcProfile:
    """
    Curvature bound η⁻, threshold ζ and the assumptions h_λ satisfies

    h'_λ(t) = λ·sign(t) holds for |t| ≥ ζ, except for unsmoothed capped-ℓ1: there ζ is
    the kink γλ/2, h'_λ(±ζ) = ±λ/2 (midpoint subgradient) and the flat tail starts
    strictly beyond ζ.

    Example:
        dc_profile(PenaltySpec(family="mcp", lam=1, shape=2)).eta_minus  # 0.5
    """
    family = spec.family
    lam = spec.lam

    if family is PenaltyFamily.L1:
        return DcProfile(eta_minus=0.0, zeta=None, assumptions_satisfied=WITHOUT_FLAT_TAIL)
    if family is PenaltyFamily.SCAD:
        return DcProfile(
            eta_minus=1.0 / (spec.gamma - 1.0),
            zeta=spec.gamma * lam,
            assumptions_satisfied=ALL_ASSUMPTIONS,
        )
    if family is PenaltyFamily.MCP:
        return DcProfile(
            eta_minus=1.0 / spec.gamma,
            zeta=spec.gamma * lam,
            assumptions_satisfied=ALL_ASSUMPTIONS,
        )
    if family is PenaltyFamily.CAPPED_L1:
        lo, kink, hi = capped_window(spec)
        if not spec.smooth:
            return DcProfile(eta_minus=math.inf, zeta=kink, assumptions_satisfied=WITHOUT_CURVATURE)
        return DcProfile(eta_minus=lam / (hi - lo), zeta=hi, assumptions_satisfied=ALL_ASSUMPTIONS)
    if family is PenaltyFamily.TRANSFORMED_L1:
        return DcProfile(eta_minus=2.0 * lam / spec.gamma, zeta=None,
                         assumptions_satisfied=WITHOUT_FLAT_TAIL)
    return DcProfile(eta_minus=lam / spec.log_offset, zeta=None,
                     assumptions_satisfied=WITHOUT_FLAT_TAIL)


def scale_check(spec: PenaltySpec, t: float, c: float) -> Tuple[float, float]:
    """
    Return (p_{cλ}(ct), c²·p_λ(t)); the two agree for scale-free families

    Raises:
        UnsupportedFamilyError: transformed-ℓ1 and logarithmic penalties
    """
    if not spec.is_scale_free:
        raise UnsupportedFamilyError(
            f"{spec.family.value} is not scale free",
            {"family": spec.family.value},
        )
    if not c > 0:
        raise ParameterDomainError("scale factor must be positive", {"c": c})
    scaled = spec.with_lambda(c * spec.lam)
    return float(penalty_value(scaled, c * t)), float(c ** 2 * penalty_value(spec, t))


def estimate_eta_minus(spec: PenaltySpec, t_max: Optional[float] = None, num: int = 20001) -> float:
    """Largest finite-difference slope of h'_λ on [0, t_max]; cross-checks dc_profile"""
    if t_max is None:
        zeta = dc_profile(spec).zeta
        t_max = 2.0 * zeta if zeta else 10.0 * max(spec.lam, 1e-12) * (spec.shape or 1.0)
    grid = np.linspace(0.0, t_max, num)
    slopes = np.diff(h_derivative(spec, grid)) / np.diff(grid)
    return float(np.max(slopes))


def make_grid(t_min: float, t_max: float, num: int) -> np.ndarray:
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min >= t_max:
        raise ParameterDomainError("grid requires t_min < t_max", {"t_min": t_min, "t_max": t_max})
    if num < 2:
        raise ParameterDomainError("grid requires at least two points", {"num": num})
    return np.linspace(t_min, t_max, num)


def penalty_curve(spec: PenaltySpec, grid: np.ndarray) -> pd.DataFrame:
    """(t, p(t), p'(t)) samples for plotting penalty shapes"""
    grid = np.asarray(grid, dtype=float)
    return pd.DataFrame({
        "t": grid,
        "p": penalty_value(spec, grid),
        "dp": penalty_derivative(spec, grid),
    })
