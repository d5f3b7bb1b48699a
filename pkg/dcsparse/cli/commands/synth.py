"""
dcsparse synth
Generate a seeded synthetic dataset and its truth sidecar
"""
from pathlib import Path
from typing import Optional

import typer

from dcsparse.cli.commands.common import console
from dcsparse.data import NoiseKind, SyntheticSpec, generate, write_csv, write_truth
from dcsparse.exceptions import exit_on_error
from dcsparse.losses import LossKind
from dcsparse.utils import sidecar_path


@exit_on_error
def synth_dataset(
    out: Path = typer.Option(..., "--out", "-o", help="Dataset CSV to write"),
    n: int = typer.Option(..., "--n", help="Number of observations"),
    p: int = typer.Option(..., "--p", help="Number of predictors"),
    s: int = typer.Option(..., "--s", help="Number of nonzero coefficients"),
    signal_min: float = typer.Option(1.0, "--signal-min", help="Smallest nonzero |β*|"),
    signal_max: float = typer.Option(1.0, "--signal-max", help="Largest nonzero |β*|"),
    sigma: float = typer.Option(1.0, "--sigma", help="Noise scale"),
    correlation: float = typer.Option(0.0, "--correlation", help="Toeplitz design correlation ρ"),
    noise: NoiseKind = typer.Option(NoiseKind.GAUSSIAN, "--noise", help="Noise distribution"),
    loss: LossKind = typer.Option(LossKind.SQUARED, "--loss", help="Response model"),
    standardize: Optional[bool] = typer.Option(
        None, "--standardize/--no-standardize", help="Standardize columns (default: squared loss only)"
    ),
    column_scale: float = typer.Option(1.0, "--column-scale", help="Column multiplier after standardizing"),
    seed: int = typer.Option(0, "--seed", help="64-bit seed"),
    truth: Optional[Path] = typer.Option(None, "--truth", help="Truth sidecar (default: <out>_truth.csv)"),
):
    """
    Write a dataset CSV (y,x1..xp) and a truth CSV (coordinate, beta_star, in_support, sigma, seed)

    Example:
        dcsparse synth --out data/train.csv --n 200 --p 400 --s 5 --signal-min 2 --signal-max 4 --seed 7
    """
    spec = SyntheticSpec(
        n=n,
        p=p,
        s=s,
        signal_min=signal_min,
        signal_max=signal_max,
        sigma=sigma,
        design_correlation=correlation,
        noise=noise,
        loss=loss,
        seed=seed,
        standardize=standardize,
        column_scale=column_scale,
    )
    problem, synthetic_truth = generate(spec)

    truth_path = truth or sidecar_path(out, "truth")
    write_csv(out, problem)
    write_truth(truth_path, synthetic_truth)
    console.print(f"[green]Wrote[/green] {out} and {truth_path}")
