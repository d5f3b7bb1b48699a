"""
dcsparse penalty-curve
Tabulate a penalty and its derivative for plotting
"""
from pathlib import Path
from typing import Optional

import typer

from dcsparse.cli.commands.common import emit_frame
from dcsparse.config import build_penalty_spec
from dcsparse.exceptions import exit_on_error
from dcsparse.penalties import PenaltyFamily, make_grid, penalty_curve


@exit_on_error
def penalty_curve_table(
    penalty: PenaltyFamily = typer.Option(PenaltyFamily.SCAD, "--penalty", "-p", help="Penalty family"),
    lam: float = typer.Option(1.0, "--lambda", "-l", help="Penalty level λ"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="Shape γ for scad, mcp and capped-l1"),
    a: Optional[float] = typer.Option(None, "--a", help="Shape a for transformed-l1"),
    offset: Optional[float] = typer.Option(None, "--offset", help="Offset ε for log"),
    smooth: bool = typer.Option(False, "--smooth", help="Smooth the capped-l1 kink"),
    t_min: float = typer.Option(-5.0, "--t-min", help="Grid start"),
    t_max: float = typer.Option(5.0, "--t-max", help="Grid end"),
    num: int = typer.Option(201, "--num", help="Number of grid points"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Curve CSV (default: stdout)"),
):
    """
    Print t, p(t), p'(t) on an evenly spaced grid

    Example:
        dcsparse penalty-curve --penalty mcp --gamma 2 --lambda 1 --t-min -4 --t-max 4
    """
    spec = build_penalty_spec(penalty, lam, gamma=gamma, a=a, offset=offset, smooth=smooth)
    emit_frame(penalty_curve(spec, make_grid(t_min, t_max, num)), out)
