"""Test synthetic instance generation and the CSV formats"""
import io

import numpy as np
import pytest

from dcsparse.data import (
    NoiseKind,
    SyntheticSpec,
    generate,
    read_coefficients,
    read_csv,
    read_truth,
    replicate_seed,
    write_coefficients,
    write_csv,
    write_truth,
)
from dcsparse.exceptions import ParameterDomainError, ParseError, ShapeError
from dcsparse.losses import LossKind


def test_same_seed_same_instance():
    spec = SyntheticSpec(n=30, p=12, s=3, signal_min=1.0, signal_max=2.0, seed=42)
    first, first_truth = generate(spec)
    second, second_truth = generate(spec)
    np.testing.assert_array_equal(first.design, second.design)
    np.testing.assert_array_equal(first.response, second.response)
    np.testing.assert_array_equal(first_truth.beta_star, second_truth.beta_star)


def test_different_seeds_differ():
    first, _ = generate(SyntheticSpec(n=30, p=12, s=3, seed=1))
    second, _ = generate(SyntheticSpec(n=30, p=12, s=3, seed=2))
    assert not np.array_equal(first.design, second.design)


def test_noiseless_response_is_exact():
    problem, truth = generate(SyntheticSpec(n=40, p=20, s=4, sigma=0.0, seed=3))
    np.testing.assert_array_equal(problem.response, problem.design @ truth.beta_star)


def test_truth_support_and_magnitudes():
    _, truth = generate(SyntheticSpec(n=20, p=50, s=7, signal_min=2.0, signal_max=3.0, seed=4))
    assert truth.s == 7
    assert np.all(np.diff(truth.support) > 0)
    np.testing.assert_array_equal(np.flatnonzero(truth.beta_star), truth.support)
    magnitudes = np.abs(truth.beta_star[truth.support])
    assert np.all((magnitudes >= 2.0) & (magnitudes <= 3.0))


def test_standardized_columns_have_unit_scale():
    problem, _ = generate(SyntheticSpec(n=200, p=10, s=2, design_correlation=0.5, seed=5))
    np.testing.assert_allclose(problem.column_norms, 1.0, rtol=1e-12)


def test_raw_toeplitz_columns_are_near_unit_scale():
    problem, _ = generate(SyntheticSpec(n=10_000, p=5, s=2, design_correlation=0.5, standardize=False, seed=6))
    assert np.all((problem.column_norms > 0.95) & (problem.column_norms < 1.05))
    correlation = problem.design[:, 0] @ problem.design[:, 1] / problem.n
    assert correlation == pytest.approx(0.5, abs=0.05)


def test_column_scale_multiplies_columns():
    problem, _ = generate(SyntheticSpec(n=100, p=4, s=1, column_scale=2.0, seed=7))
    np.testing.assert_allclose(problem.column_norms, 4.0, rtol=1e-12)


def test_gaussian_noise_variance():
    problem, truth = generate(SyntheticSpec(n=5000, p=5, s=2, sigma=2.0, seed=8))
    noise = problem.response - problem.design @ truth.beta_star
    assert np.var(noise) == pytest.approx(4.0, rel=0.1)


def test_rademacher_noise_has_fixed_magnitude():
    problem, truth = generate(SyntheticSpec(n=200, p=5, s=2, sigma=0.5, noise=NoiseKind.RADEMACHER, seed=9))
    noise = problem.response - problem.design @ truth.beta_star
    np.testing.assert_allclose(np.abs(noise), 0.5, rtol=1e-12)


def test_logistic_instances_are_binary_and_unstandardized():
    spec = SyntheticSpec(n=100, p=6, s=2, loss=LossKind.LOGISTIC, seed=10)
    problem, _ = generate(spec)
    assert not spec.standardized
    assert problem.loss is LossKind.LOGISTIC
    assert set(np.unique(problem.response)) <= {0.0, 1.0}


def test_replicate_seeds_use_xor():
    spec = SyntheticSpec(n=10, p=5, s=1, seed=12)
    assert replicate_seed(12, 5) == 12 ^ 5
    assert spec.for_replicate(5).seed == 9


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 10, "p": 5, "s": 6},
        {"n": 10, "p": 5, "s": 0},
        {"n": 0, "p": 5, "s": 1},
        {"n": 10, "p": 5, "s": 1, "design_correlation": 1.0},
        {"n": 10, "p": 5, "s": 1, "sigma": -1.0},
        {"n": 10, "p": 5, "s": 1, "signal_min": 2.0, "signal_max": 1.0},
        {"n": 10, "p": 5, "s": 1, "seed": -1},
        {"n": 10, "p": 5, "s": 1, "column_scale": 0.0},
    ],
)
def test_spec_domain_errors(kwargs):
    with pytest.raises(ParameterDomainError):
        SyntheticSpec(**kwargs)


# CSV

def test_csv_round_trip_is_exact(tmp_path):
    problem, _ = generate(SyntheticSpec(n=25, p=6, s=2, sigma=0.3, seed=11))
    path = tmp_path / "data" / "train.csv"
    write_csv(path, problem)
    loaded = read_csv(path)
    np.testing.assert_array_equal(loaded.design, problem.design)
    np.testing.assert_array_equal(loaded.response, problem.response)


def test_csv_layout(tmp_path):
    problem, _ = generate(SyntheticSpec(n=3, p=2, s=1, seed=12))
    path = tmp_path / "small.csv"
    write_csv(path, problem)
    raw = path.read_bytes()
    assert raw.startswith(b"y,x1,x2\n")
    assert b"\r" not in raw
    assert len(raw.decode().splitlines()) == 4


def test_same_spec_writes_identical_bytes(tmp_path):
    spec = SyntheticSpec(n=15, p=4, s=2, seed=13)
    write_csv(tmp_path / "a.csv", generate(spec)[0])
    write_csv(tmp_path / "b.csv", generate(spec)[0])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_write_to_stream():
    problem, _ = generate(SyntheticSpec(n=2, p=1, s=1, seed=14))
    buffer = io.StringIO()
    write_csv(buffer, problem)
    assert buffer.getvalue().startswith("y,x1\n")


def test_logistic_csv_checks_the_response(tmp_path):
    path = tmp_path / "binary.csv"
    path.write_text("y,x1\n1,0.5\n0,-0.5\n")
    problem = read_csv(path, LossKind.LOGISTIC)
    assert problem.loss is LossKind.LOGISTIC


def test_empty_file_is_a_parse_error(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(ParseError):
        read_csv(path)


def test_missing_file_is_a_parse_error(tmp_path):
    with pytest.raises(ParseError):
        read_csv(tmp_path / "absent.csv")


def test_header_only_is_a_shape_error(tmp_path):
    path = tmp_path / "header.csv"
    path.write_text("y,x1,x2\n")
    with pytest.raises(ShapeError):
        read_csv(path)


def test_non_numeric_cell_reports_its_line(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("y,x1\n1,2\n3,abc\n")
    with pytest.raises(ParseError) as excinfo:
        read_csv(path)
    assert excinfo.value.details["line"] == 3
    assert excinfo.value.details["column"] == "x1"


def test_short_row_is_a_shape_error(tmp_path):
    path = tmp_path / "short.csv"
    path.write_text("y,x1,x2\n1,2,3\n4,5\n")
    with pytest.raises(ShapeError) as excinfo:
        read_csv(path)
    assert excinfo.value.details["line"] == 3


def test_long_row_is_a_shape_error(tmp_path):
    path = tmp_path / "long.csv"
    path.write_text("y,x1\n1,2\n3,4,5\n")
    with pytest.raises(ShapeError):
        read_csv(path)


def test_every_row_one_field_too_many_is_a_shape_error(tmp_path):
    path = tmp_path / "shifted.csv"
    path.write_text("y,x1\n1,2,3\n4,5,6\n")
    with pytest.raises(ShapeError) as excinfo:
        read_csv(path)
    assert excinfo.value.details["line"] == 2


def test_response_only_is_a_shape_error(tmp_path):
    path = tmp_path / "response.csv"
    path.write_text("y\n1\n2\n")
    with pytest.raises(ShapeError):
        read_csv(path)


def test_truth_round_trip(tmp_path):
    _, truth = generate(SyntheticSpec(n=20, p=15, s=3, sigma=0.7, seed=2 ** 63 + 5))
    path = tmp_path / "truth.csv"
    write_truth(path, truth)
    loaded = read_truth(path)
    np.testing.assert_array_equal(loaded.beta_star, truth.beta_star)
    np.testing.assert_array_equal(loaded.support, truth.support)
    assert loaded.sigma == truth.sigma
    assert loaded.seed == truth.seed


def test_truth_requires_its_columns(tmp_path):
    path = tmp_path / "truth.csv"
    path.write_text("coordinate,beta_star\n1,0.5\n")
    with pytest.raises(ParseError):
        read_truth(path)


def test_coefficient_round_trip(tmp_path):
    beta = np.array([0.0, -1.25, 1e-300, 3.0 / 7.0])
    path = tmp_path / "fit.csv"
    write_coefficients(path, beta)
    np.testing.assert_array_equal(read_coefficients(path), beta)
