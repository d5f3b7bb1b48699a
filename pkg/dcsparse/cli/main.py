"""
dcsparse CLI - Main entry point
"""
import typer
from rich.console import Console
from rich.panel import Panel

from dcsparse.config import get_settings
from dcsparse.logging import setup_logging_from_settings

app = typer.Typer(
    name="dcsparse",
    help="Sparse regression with difference-of-convex penalties",
    add_completion=False,
)

console = Console(stderr=True)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(False, "--version", "-v", help="Show version"),
):
    """dcsparse - DC-penalized sparse regression and its theory checks"""
    if version:
        from dcsparse import __version__
        console.print(f"dcsparse version: {__version__}")
        raise typer.Exit()

    setup_logging_from_settings(get_settings())

    if ctx.invoked_subcommand is None:
        console.print(Panel.fit(
            "[bold cyan]dcsparse[/bold cyan] - DC-penalized sparse regression\n\n"
            "Available commands:\n"
            "  [green]fit[/green]            Fit a penalized estimator to a CSV dataset\n"
            "  [green]synth[/green]          Generate a synthetic dataset and truth file\n"
            "  [green]check[/green]          Certify stationarity and compare error bounds\n"
            "  [green]experiment[/green]     Run a Monte Carlo experiment file\n"
            "  [green]penalty-curve[/green]  Tabulate a penalty and its derivative\n\n"
            "Use [yellow]dcsparse --help[/yellow] for more information",
            border_style="cyan"
        ))


# Import subcommands
from dcsparse.cli.commands import check, experiment, fit, penalty_curve, synth  # noqa: E402

app.command(name="fit")(fit.fit_model)
app.command(name="synth")(synth.synth_dataset)
app.command(name="check")(check.check_fit)
app.command(name="experiment")(experiment.run_experiment_file)
app.command(name="penalty-curve")(penalty_curve.penalty_curve_table)


if __name__ == "__main__":
    app()
