"""
dcsparse check
Certify d-stationarity of a fitted coefficient vector and compare errors with the bounds
"""
from pathlib import Path
from typing import Optional

import pandas as pd
import typer
from rich.markup import escape

from dcsparse.cli.commands.common import console, emit_frame, print_frame
from dcsparse.config import build_penalty_spec
from dcsparse.data import SyntheticTruth, read_coefficients, read_csv, read_truth
from dcsparse.exceptions import ParameterDomainError, RegimeError, ShapeError, exit_on_error
from dcsparse.losses import LossKind, Problem
from dcsparse.penalties import PenaltyFamily, PenaltySpec, dc_profile
from dcsparse.stationarity import check_d_stationary
from dcsparse.theory import (
    ConeRegime,
    ConeSpec,
    check_estimation_bound,
    check_glm_bound,
    check_prediction_bound,
    estimate_re_constant,
)
from dcsparse.utils import sidecar_path


def bound_frame(
    problem: Problem,
    spec: PenaltySpec,
    beta_hat,
    truth: SyntheticTruth,
    re_gamma: Optional[float],
    re_samples: int,
    seed: int,
    c: Optional[float],
) -> pd.DataFrame:
    """One row per applicable bound: estimation and prediction, or the GLM bound"""
    if truth.beta_star.shape[0] != problem.p:
        raise ShapeError(
            "truth length must equal the number of predictors",
            {"expected": problem.p, "got": truth.beta_star.shape[0]},
        )
    logistic = problem.loss is LossKind.LOGISTIC
    c = c if c is not None else (0.25 if logistic else 0.5)
    regime = ConeRegime.GLM if logistic else ConeRegime.LINEAR

    if re_gamma is None:
        cone = ConeSpec.build(truth.support, c, regime)
        beta = truth.beta_star if logistic else None
        re_gamma = estimate_re_constant(problem, cone, re_samples, seed, beta=beta)
        console.print(f"estimated re_gamma={re_gamma:.6g} from {re_samples} cone samples", highlight=False)

    rows = []
    if logistic:
        try:
            report = check_glm_bound(beta_hat, truth, spec.lam, re_gamma, dc_profile(spec).eta_minus, c)
            rows.append({"check": "glm", **report.model_dump()})
        except RegimeError as exc:
            console.print(f"[yellow]GLM bound skipped: {escape(exc.message)}[/yellow]")
    else:
        if not re_gamma > 0:
            raise ParameterDomainError("restricted eigenvalue estimate is zero; bounds are undefined")
        estimation = check_estimation_bound(beta_hat, truth, spec.lam, re_gamma)
        prediction = check_prediction_bound(problem, beta_hat, truth, spec.lam, re_gamma)
        rows.append({"check": "estimation", **estimation.model_dump()})
        rows.append({"check": "prediction", **prediction.model_dump()})

    columns = ["check", "observed", "bound", "satisfied", "slack_ratio", "stated_bound", "stated_satisfied"]
    frame = pd.DataFrame(rows, columns=columns)
    frame.insert(1, "re_gamma", re_gamma)
    return frame


@exit_on_error
def check_fit(
    dataset: Path = typer.Argument(..., help="Dataset CSV the coefficients were fitted on"),
    coefficients: Path = typer.Option(..., "--coefficients", "-b", help="Coefficient CSV from dcsparse fit"),
    penalty: PenaltyFamily = typer.Option(PenaltyFamily.SCAD, "--penalty", "-p", help="Penalty family"),
    lam: float = typer.Option(..., "--lambda", "-l", help="Penalty level λ"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="Shape γ for scad, mcp and capped-l1"),
    a: Optional[float] = typer.Option(None, "--a", help="Shape a for transformed-l1"),
    offset: Optional[float] = typer.Option(None, "--offset", help="Offset ε for log"),
    smooth: bool = typer.Option(False, "--smooth", help="Smooth the capped-l1 kink"),
    loss: LossKind = typer.Option(LossKind.SQUARED, "--loss", help="Loss function"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Stationarity tolerance (default 1e-6·(1+‖∇L‖∞))"),
    truth: Optional[Path] = typer.Option(None, "--truth", help="Truth sidecar from dcsparse synth"),
    bounds: bool = typer.Option(False, "--bounds", help="Also check the error bounds (needs --truth)"),
    re_gamma: Optional[float] = typer.Option(None, "--re-gamma", help="Restricted eigenvalue (default: Monte Carlo)"),
    re_samples: int = typer.Option(2000, "--re-samples", help="Cone samples for the Monte Carlo estimate"),
    c: Optional[float] = typer.Option(None, "--c", help="Cone parameter c (default 0.5, logistic 0.25)"),
    seed: int = typer.Option(0, "--seed", help="Seed for cone sampling"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Stationarity CSV (default: stdout)"),
):
    """
    Print the stationarity report as CSV (coordinate, residual, certificate)

    With --bounds the bound comparison goes to <out>_bounds.csv, or to a table on stderr.

    Example:
        dcsparse check train.csv -b fit.csv --penalty scad --gamma 3.7 --lambda 0.3 --truth train_truth.csv --bounds
    """
    if bounds and truth is None:
        raise ParameterDomainError("--bounds requires --truth")

    problem = read_csv(dataset, loss)
    spec = build_penalty_spec(penalty, lam, gamma=gamma, a=a, offset=offset, smooth=smooth)
    beta_hat = read_coefficients(coefficients)

    report = check_d_stationary(problem, spec, beta_hat, tol)
    emit_frame(report.to_frame(), out)
    console.print(
        f"d_stationary={report.is_d_stationary} max_violation={report.max_violation:.3g} "
        f"tol={report.tol:.3g} strict_dual_feasible={report.strict_dual_feasible}",
        highlight=False,
    )

    if bounds:
        frame = bound_frame(problem, spec, beta_hat, read_truth(truth), re_gamma, re_samples, seed, c)
        if out is None:
            print_frame(frame, "Error bounds")
        else:
            emit_frame(frame, sidecar_path(out, "bounds"))
