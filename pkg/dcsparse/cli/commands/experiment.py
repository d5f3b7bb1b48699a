"""
dcsparse experiment
Run a Monte Carlo experiment described by a key=value file
"""
from pathlib import Path
from typing import Optional

import typer

from dcsparse.cli.commands.common import console, emit_frame, print_frame
from dcsparse.config import load_experiment_config
from dcsparse.exceptions import exit_on_error
from dcsparse.theory import ExperimentKind, run_experiment
from dcsparse.utils import sidecar_path


@exit_on_error
def run_experiment_file(
    config_path: Path = typer.Argument(..., help="Experiment file (key = value lines)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Per-replicate CSV (overrides 'out')"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker processes, capped by DC_SPARSE_THREADS"),
):
    """
    Write one CSV row per replicate and an aggregate row to <out>_summary.csv

    Failed replicates are recorded in their row and counted in the summary.

    Example:
        dcsparse experiment scad_support.cfg --threads 4
    """
    config = load_experiment_config(config_path)
    out = out or (Path(config.out) if config.out else None)

    result = run_experiment(
        ExperimentKind(config.experiment),
        config.synthetic_spec(),
        config.penalty_spec(),
        config.solver_config(),
        replicates=config.replicates,
        re_samples=config.re_samples,
        c=config.c,
        threads=threads,
    )

    emit_frame(result.records_frame(), out)
    if out is None:
        print_frame(result.summary_frame(), "Summary")
    else:
        emit_frame(result.summary_frame(), sidecar_path(out, "summary"))

    summary = result.summary
    rate = "n/a" if summary.primary_rate is None else f"{summary.primary_rate:.3f}"
    console.print(
        f"{summary.experiment}: replicates={summary.replicates} failures={summary.failures} "
        f"evaluated={summary.evaluated} primary_rate={rate}",
        highlight=False,
    )
