"""Test the dcsparse command line"""
import numpy as np
import pandas as pd
import pytest
from typer.testing import CliRunner

from dcsparse import __version__
from dcsparse.cli.main import app
from dcsparse.data import write_coefficients, write_csv
from tests.factories import random_problem

runner = CliRunner()

SCAD_ARGS = ["--penalty", "scad", "--gamma", "3.7", "--lambda", "0.6"]


@pytest.fixture
def dataset(tmp_path):
    """Synthetic dataset and truth written by the synth command"""
    out = tmp_path / "data" / "train.csv"
    result = runner.invoke(
        app,
        ["synth", "--out", str(out), "--n", "100", "--p", "20", "--s", "3",
         "--signal-min", "2", "--signal-max", "3", "--seed", "7"],
    )
    assert result.exit_code == 0, result.output
    return out


def test_cli_help():
    """Test main CLI help"""
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for command in ("fit", "synth", "check", "experiment", "penalty-curve"):
        assert command in result.output


def test_cli_version():
    """Test version flag"""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"dcsparse version: {__version__}" in result.output


def test_penalty_curve(tmp_path):
    """Test MCP curve values at the origin and on the flat tail"""
    out = tmp_path / "mcp.csv"
    result = runner.invoke(app, ["penalty-curve", "--penalty", "mcp", "--gamma", "2", "--lambda", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output

    curve = pd.read_csv(out)
    assert list(curve.columns) == ["t", "p", "dp"]
    assert len(curve) == 201
    tail = curve.iloc[-1]
    assert tail["t"] == 5.0
    assert tail["p"] == pytest.approx(1.0)
    assert tail["dp"] == pytest.approx(0.0)
    assert curve.loc[100, "p"] == pytest.approx(0.0)


def test_penalty_curve_rejects_bad_grid():
    """Test that an empty grid is an input error"""
    result = runner.invoke(app, ["penalty-curve", "--t-min", "1", "--t-max", "0", "--gamma", "3.7"])
    assert result.exit_code == 1
    assert "t_min < t_max" in result.output


def test_synth_writes_dataset_and_truth(dataset):
    """Test synth outputs"""
    frame = pd.read_csv(dataset)
    assert list(frame.columns) == ["y"] + [f"x{j}" for j in range(1, 21)]
    assert len(frame) == 100

    truth = pd.read_csv(dataset.with_name("train_truth.csv"))
    assert truth["in_support"].sum() == 3
    assert (truth["seed"] == 7).all()


def test_synth_is_deterministic(tmp_path):
    """Test that the same seed writes identical bytes"""
    args = ["--n", "30", "--p", "8", "--s", "2", "--seed", "11", "--sigma", "0.5"]
    first = runner.invoke(app, ["synth", "--out", str(tmp_path / "a.csv"), *args])
    second = runner.invoke(app, ["synth", "--out", str(tmp_path / "b.csv"), *args])
    assert first.exit_code == second.exit_code == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert (tmp_path / "a_truth.csv").read_bytes() == (tmp_path / "b_truth.csv").read_bytes()


def test_synth_rejects_s_above_p(tmp_path):
    """Test synth domain errors"""
    result = runner.invoke(app, ["synth", "--out", str(tmp_path / "x.csv"), "--n", "10", "--p", "3", "--s", "5"])
    assert result.exit_code == 1
    assert not (tmp_path / "x.csv").exists()


def test_fit_and_check_pipeline(dataset, tmp_path):
    """Test synth → fit → check with bounds"""
    fit_path = tmp_path / "fit.csv"
    result = runner.invoke(app, ["fit", str(dataset), *SCAD_ARGS, "--out", str(fit_path)])
    assert result.exit_code == 0, result.output
    assert "d_stationary=True" in result.output

    coefficients = pd.read_csv(fit_path)
    assert list(coefficients.columns) == ["coordinate", "beta_hat"]
    assert len(coefficients) == 20
    assert (tmp_path / "fit_trace.csv").exists()

    truth = pd.read_csv(dataset.with_name("train_truth.csv"))
    estimated = coefficients["beta_hat"].to_numpy() != 0
    np.testing.assert_array_equal(estimated, truth["in_support"].to_numpy() == 1)

    report_path = tmp_path / "stationarity.csv"
    result = runner.invoke(
        app,
        ["check", str(dataset), "-b", str(fit_path), *SCAD_ARGS,
         "--truth", str(dataset.with_name("train_truth.csv")), "--bounds", "--re-samples", "200",
         "--out", str(report_path)],
    )
    assert result.exit_code == 0, result.output
    assert "d_stationary=True" in result.output

    report = pd.read_csv(report_path)
    assert list(report.columns) == ["coordinate", "residual", "certificate"]
    assert report["residual"].abs().max() <= 1e-6

    bounds = pd.read_csv(tmp_path / "stationarity_bounds.csv")
    assert bounds["check"].tolist() == ["estimation", "prediction"]
    assert bounds["satisfied"].all()


def test_fit_l1_without_penalty_is_least_squares(tmp_path):
    """Test that l1 with λ = 0 reproduces ordinary least squares"""
    problem = random_problem(30, 4, seed=3)
    data = tmp_path / "ols.csv"
    write_csv(data, problem)
    out = tmp_path / "fit.csv"

    result = runner.invoke(app, ["fit", str(data), "--penalty", "l1", "--lambda", "0", "--out", str(out)])
    assert result.exit_code == 0, result.output

    expected, *_ = np.linalg.lstsq(problem.design, problem.response, rcond=None)
    np.testing.assert_allclose(pd.read_csv(out)["beta_hat"], expected, atol=1e-7)


def test_fit_reports_iteration_cap(dataset, tmp_path):
    """Test exit code 2 when the outer loop stops at its cap"""
    out = tmp_path / "capped.csv"
    result = runner.invoke(
        app,
        ["fit", str(dataset), "--penalty", "mcp", "--gamma", "3", "--lambda", "0.6",
         "--init", "zero", "--max-outer", "1", "--out", str(out)],
    )
    assert result.exit_code == 2
    assert out.exists()


def test_fit_custom_init(dataset, tmp_path):
    """Test --init custom with and without a start file"""
    missing = runner.invoke(app, ["fit", str(dataset), *SCAD_ARGS, "--init", "custom"])
    assert missing.exit_code == 1
    assert "--start" in missing.output

    start = tmp_path / "start.csv"
    write_coefficients(start, np.zeros(20))
    result = runner.invoke(app, ["fit", str(dataset), *SCAD_ARGS, "--init", "custom", "--start", str(start),
                                 "--out", str(tmp_path / "fit.csv")])
    assert result.exit_code == 0, result.output


def test_fit_without_out_prints_the_trace(dataset):
    """Test that stdout carries the coefficients and the trace is shown as a table"""
    result = runner.invoke(app, ["fit", str(dataset), *SCAD_ARGS])
    assert result.exit_code == 0, result.output
    assert "coordinate,beta_hat" in result.output
    assert "Objective trace" in result.output
    assert "objective" in result.output


def test_fit_rejects_malformed_csv(tmp_path):
    """Test that a non-numeric cell is an input error naming its line"""
    data = tmp_path / "bad.csv"
    data.write_text("y,x1\n1,2\n3,abc\n")
    result = runner.invoke(app, ["fit", str(data), "--penalty", "l1", "--lambda", "0.1"])
    assert result.exit_code == 1
    assert "line 3" in result.output


def test_fit_requires_shape_parameter(dataset):
    """Test that scad without --gamma is rejected"""
    result = runner.invoke(app, ["fit", str(dataset), "--penalty", "scad", "--lambda", "0.5"])
    assert result.exit_code == 1


def test_check_bounds_require_truth(dataset, tmp_path):
    """Test --bounds without --truth"""
    coefficients = tmp_path / "zero.csv"
    write_coefficients(coefficients, np.zeros(20))
    result = runner.invoke(app, ["check", str(dataset), "-b", str(coefficients), *SCAD_ARGS, "--bounds"])
    assert result.exit_code == 1


def test_check_flags_zero_coefficients(dataset, tmp_path):
    """Test that β = 0 is not stationary for a strong signal"""
    coefficients = tmp_path / "zero.csv"
    write_coefficients(coefficients, np.zeros(20))
    out = tmp_path / "report.csv"
    result = runner.invoke(
        app, ["check", str(dataset), "-b", str(coefficients), *SCAD_ARGS, "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    assert "d_stationary=False" in result.output
    assert pd.read_csv(out)["residual"].max() > 1.0


def test_check_rejects_wrong_coefficient_length(dataset, tmp_path):
    """Test coefficient length validation"""
    coefficients = tmp_path / "short.csv"
    write_coefficients(coefficients, np.zeros(5))
    result = runner.invoke(app, ["check", str(dataset), "-b", str(coefficients), *SCAD_ARGS])
    assert result.exit_code == 1


EXPERIMENT_FILE = """\
experiment = support
n = 60
p = 10
s = 2
signal_min = 2
signal_max = 3
sigma = 0.5
penalty = scad
gamma = 3.7
lambda = 0.3
replicates = 2
seed = 3
re_samples = 100
"""


def test_experiment_command(tmp_path):
    """Test per-replicate and summary outputs"""
    config = tmp_path / "support.cfg"
    config.write_text(EXPERIMENT_FILE)
    out = tmp_path / "runs" / "support.csv"

    result = runner.invoke(app, ["experiment", str(config), "--out", str(out), "--threads", "1"])
    assert result.exit_code == 0, result.output

    records = pd.read_csv(out)
    assert records["replicate"].tolist() == [0, 1]
    assert records["seed"].tolist() == [3, 2]

    summary = pd.read_csv(tmp_path / "runs" / "support_summary.csv")
    assert len(summary) == 1
    assert summary.loc[0, "experiment"] == "support"
    assert summary.loc[0, "replicates"] == 2
    assert summary.loc[0, "evaluated"] == 2
    assert "evaluated=2" in result.output


def test_experiment_is_byte_identical(tmp_path):
    """Test that reruns write identical files"""
    config = tmp_path / "support.cfg"
    config.write_text(EXPERIMENT_FILE)
    for name in ("first", "second"):
        result = runner.invoke(app, ["experiment", str(config), "--out", str(tmp_path / f"{name}.csv")])
        assert result.exit_code == 0, result.output
    assert (tmp_path / "first.csv").read_bytes() == (tmp_path / "second.csv").read_bytes()
    assert (tmp_path / "first_summary.csv").read_bytes() == (tmp_path / "second_summary.csv").read_bytes()


def test_experiment_rejects_bad_config(tmp_path):
    """Test that replicates = 0 is an input error"""
    config = tmp_path / "bad.cfg"
    config.write_text(EXPERIMENT_FILE.replace("replicates = 2", "replicates = 0"))
    result = runner.invoke(app, ["experiment", str(config)])
    assert result.exit_code == 1
