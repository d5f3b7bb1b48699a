"""Test cones, restricted eigenvalue estimates and the error bounds"""
import math

import numpy as np
import pytest

from dcsparse.data import SyntheticTruth
from dcsparse.exceptions import ParameterDomainError, RegimeError
from dcsparse.losses import LossKind, Problem
from dcsparse.penalties import PenaltySpec
from dcsparse.schemas import BoundReport
from dcsparse.theory import (
    ConeRegime,
    ConeSpec,
    audit_glm_assumptions,
    check_estimation_bound,
    check_glm_bound,
    check_prediction_bound,
    check_rsc_composite,
    cone_membership,
    estimate_re_constant,
    existence_ball,
    oracle_linf_bound,
    sample_cone_directions,
    select_lambda,
)
from tests.factories import random_problem


def make_truth(beta_star, sigma=1.0) -> SyntheticTruth:
    beta_star = np.asarray(beta_star, dtype=float)
    return SyntheticTruth(beta_star=beta_star, support=np.flatnonzero(beta_star), sigma=sigma, seed=0)


# Cones

def test_cone_ratios():
    assert ConeSpec.build([0], 0.5).ratio == pytest.approx(5.0)
    assert ConeSpec.build([0], 0.25, ConeRegime.GLM).ratio == pytest.approx(17.0)


def test_cone_membership():
    cone = ConeSpec.build([0], 1.0)
    assert not cone_membership(np.array([1.0, 3.0]), cone)
    assert cone_membership(np.array([1.0, 2.0]), cone)
    assert cone_membership(np.array([1.0, 0.0]), cone)
    assert cone_membership(np.zeros(2), cone)


@pytest.mark.parametrize("kwargs", [{"support": (0,), "c": 0.0}, {"support": (0,), "c": 1.5}, {"support": (), "c": 0.5}])
def test_cone_domain_errors(kwargs):
    with pytest.raises(ParameterDomainError):
        ConeSpec(**kwargs)


def test_cone_support_must_fit_the_dimension():
    with pytest.raises(ParameterDomainError):
        cone_membership(np.ones(3), ConeSpec.build([5], 0.5))


def test_sampled_directions_lie_in_the_cone():
    cone = ConeSpec.build([1, 4], 0.5)
    directions = sample_cone_directions(np.random.default_rng(0), cone, 12, 300)
    np.testing.assert_allclose(np.linalg.norm(directions, axis=1), 1.0)
    inside = np.abs(directions[:, [1, 4]]).sum(axis=1)
    outside = np.abs(directions).sum(axis=1) - inside
    assert np.all(outside <= cone.ratio * inside * (1 + 1e-12))


def test_re_constant_of_orthonormal_design_is_one():
    problem = Problem(np.sqrt(6.0) * np.eye(6), np.zeros(6))
    cone = ConeSpec.build([0, 1], 0.5)
    assert estimate_re_constant(problem, cone, samples=200, seed=1) == pytest.approx(1.0, rel=1e-12)


def test_re_constant_with_zero_support_column_is_zero():
    rng = np.random.default_rng(2)
    design = rng.standard_normal((20, 5))
    design[:, 0] = 0.0
    problem = Problem(design, np.zeros(20))
    assert estimate_re_constant(problem, ConeSpec.build([0], 0.5), samples=50, seed=3) == 0.0


def test_re_constant_is_deterministic_and_above_min_eigenvalue(squared_problem):
    cone = ConeSpec.build([0, 1, 2], 0.5)
    first = estimate_re_constant(squared_problem, cone, samples=1000, seed=4)
    second = estimate_re_constant(squared_problem, cone, samples=1000, seed=4)
    assert first == second
    gram = squared_problem.design.T @ squared_problem.design / squared_problem.n
    assert first >= np.linalg.eigvalsh(gram)[0] - 1e-12


def test_logistic_re_constant_is_curvature_weighted():
    logistic = random_problem(40, 6, seed=5, loss=LossKind.LOGISTIC)
    as_squared = Problem(logistic.design, logistic.response, LossKind.SQUARED)
    cone = ConeSpec.build([0, 1], 0.25, ConeRegime.GLM)
    weighted = estimate_re_constant(logistic, cone, samples=300, seed=6)
    plain = estimate_re_constant(as_squared, cone, samples=300, seed=6)
    # ψ''(0) = 1/4
    assert weighted == pytest.approx(plain / 4.0, rel=1e-12)


def test_re_constant_requires_samples(squared_problem):
    with pytest.raises(ParameterDomainError):
        estimate_re_constant(squared_problem, ConeSpec.build([0], 0.5), samples=0, seed=0)


# Penalty level

def test_select_lambda():
    assert select_lambda(1.0, 3.0, 100, 100) == pytest.approx(2.0 * math.sqrt(3.0 * math.log(100.0) / 100.0))
    assert select_lambda(1.0, 3.0, 100, 100) == pytest.approx(0.7434, abs=1e-3)
    assert select_lambda(0.0, 3.0, 100, 100) == 0.0
    assert select_lambda(2.0, 3.0, 50, 20) == pytest.approx(2.0 * select_lambda(1.0, 3.0, 50, 20))


@pytest.mark.parametrize("args", [(1.0, 1.5, 100, 100), (1.0, 3.0, 100, 1), (-1.0, 3.0, 100, 100)])
def test_select_lambda_domain(args):
    with pytest.raises(ParameterDomainError):
        select_lambda(*args)


# Bounds

def test_estimation_bound_value():
    truth = make_truth([1.0, -1.0, 2.0, 0.5, 0.0])
    report = check_estimation_bound(truth.beta_star, truth, 1.0, 1.0)
    assert report.bound == pytest.approx(5.0)
    assert report.observed == 0.0
    assert report.satisfied
    assert report.slack_ratio == 0.0


def test_estimation_bound_violation():
    truth = make_truth([1.0, 0.0, 0.0])
    report = check_estimation_bound(np.array([1.0, 10.0, 0.0]), truth, 0.1, 1.0)
    assert not report.satisfied
    assert report.slack_ratio > 1.0


def test_prediction_bound_value():
    problem = random_problem(20, 3, seed=7)
    truth = make_truth([1.0, 0.0, 0.0])
    report = check_prediction_bound(problem, truth.beta_star, truth, 2.0, 1.0)
    assert report.bound == pytest.approx(25.0)
    assert report.stated_bound == pytest.approx(25.0)
    assert report.satisfied


def test_prediction_bound_observed_error():
    problem = random_problem(20, 3, seed=8)
    truth = make_truth([1.0, -1.0, 0.0])
    beta_hat = np.array([0.5, -1.0, 0.2])
    report = check_prediction_bound(problem, beta_hat, truth, 0.5, 0.8)
    gap = problem.design @ (truth.beta_star - beta_hat)
    assert report.observed == pytest.approx(gap @ gap / problem.n)
    assert report.bound == pytest.approx((1.25 ** 2) * 2 / 0.8)
    assert report.stated_bound == pytest.approx((1.25 ** 2) * math.sqrt(2) / 0.8)


def test_glm_bound_value():
    truth = make_truth([1.0, 1.0, 1.0, 1.0, 0.0])
    report = check_glm_bound(truth.beta_star, truth, 1.0, 1.5, 0.5, 0.25)
    assert report.bound == pytest.approx(4.25)
    assert report.stated_bound == pytest.approx(4.25)
    assert report.satisfied


def test_glm_bound_needs_curvature_margin():
    truth = make_truth([1.0, 0.0])
    with pytest.raises(RegimeError):
        check_glm_bound(truth.beta_star, truth, 1.0, 0.5, 0.5, 0.25)


def test_bound_report_compare():
    report = BoundReport.compare(observed=0.4, bound=1.2)
    assert report.satisfied
    assert report.slack_ratio == pytest.approx(1.0 / 3.0)
    assert report.stated_bound is None
    assert report.stated_satisfied is None


def test_oracle_linf_bound():
    assert oracle_linf_bound(1.0, 2.0, 4, 100) == pytest.approx(3.0 * math.sqrt(math.log(4.0) / 100.0))
    with pytest.raises(ParameterDomainError):
        oracle_linf_bound(1.0, 0.0, 4, 100)


# Existence radius

def test_existence_ball_for_mcp():
    spec = PenaltySpec(family="mcp", lam=1.0, shape=2.0)
    # h'(t) = t/2 reaches (1 − c)λ = 1/2 at t = 1
    assert existence_ball(make_truth([1.0] + [0.0] * 3), 1.0, 0.5, spec) == pytest.approx(0.5)
    assert existence_ball(make_truth([1.0] * 16), 1.0, 0.5, spec) == pytest.approx(1.0, rel=1e-9)


def test_existence_ball_for_scad():
    spec = PenaltySpec(family="scad", lam=1.0, shape=3.7)
    truth = make_truth([1.0] * 100)
    assert existence_ball(truth, 1.0, 0.5, spec) == pytest.approx(1.0 + 0.5 * 2.7, rel=1e-9)


def test_existence_ball_for_l1_is_the_sparsity_radius():
    truth = make_truth([1.0] * 9)
    assert existence_ball(truth, 2.0, 0.5, PenaltySpec(family="l1", lam=2.0)) == pytest.approx(3.0)


def test_existence_ball_collapses_at_c_one():
    truth = make_truth([1.0, 1.0])
    assert existence_ball(truth, 1.0, 1.0, PenaltySpec(family="mcp", lam=1.0, shape=2.0)) == 0.0


# Composite strong convexity

def test_rsc_composite_margin_is_nonnegative_with_exact_constant():
    problem = random_problem(100, 5, seed=9)
    spec = PenaltySpec(family="mcp", lam=0.5, shape=10.0)
    gram = problem.design.T @ problem.design / problem.n
    re_gamma = float(np.linalg.eigvalsh(gram)[0])
    rng = np.random.default_rng(10)
    for _ in range(100):
        beta1, beta2 = rng.standard_normal(5), rng.standard_normal(5)
        assert check_rsc_composite(problem, spec, beta1, beta2, re_gamma, 0.1) >= -1e-10


def test_rsc_composite_requires_margin(squared_problem):
    spec = PenaltySpec(family="mcp", lam=0.5, shape=2.0)
    zeros = np.zeros(squared_problem.p)
    with pytest.raises(RegimeError):
        check_rsc_composite(squared_problem, spec, zeros, zeros, 0.4, 0.5)


# GLM audits

def test_glm_audit_of_zero_estimate(logistic_problem):
    truth = make_truth([1.0, -1.0] + [0.0] * (logistic_problem.p - 2))
    spec = PenaltySpec(family="mcp", lam=0.5, shape=3.0)
    audit = audit_glm_assumptions(logistic_problem, spec, np.zeros(logistic_problem.p), truth, 0.5, 0.25)
    assert audit.derivative_max == 0.0
    assert audit.derivative_condition
    assert audit.gradient_condition == (audit.gradient_norm <= 0.5 / 8)
    assert audit.passed == audit.gradient_condition


def test_glm_audit_flags_large_off_support_entries(logistic_problem):
    truth = make_truth([1.0] + [0.0] * (logistic_problem.p - 1))
    spec = PenaltySpec(family="mcp", lam=0.5, shape=3.0)
    beta_hat = np.zeros(logistic_problem.p)
    beta_hat[3] = 5.0
    audit = audit_glm_assumptions(logistic_problem, spec, beta_hat, truth, 0.5, 0.25)
    assert audit.derivative_max == pytest.approx(0.5)
    assert not audit.derivative_condition
    assert not audit.passed
