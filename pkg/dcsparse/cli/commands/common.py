"""
Output helpers shared by the CLI commands

CSV payloads go to stdout or to --out; everything meant for humans goes to stderr.
"""
import sys
from pathlib import Path
from typing import Optional

import pandas as pd
from rich.console import Console
from rich.table import Table

from dcsparse.data import write_frame

console = Console(stderr=True)


def emit_frame(frame: pd.DataFrame, out: Optional[Path]) -> None:
    """Write frame to out, or to stdout when out is None"""
    if out is None:
        write_frame(sys.stdout, frame)
        sys.stdout.flush()
    else:
        write_frame(out, frame)
        console.print(f"[green]Wrote[/green] {out}")


def print_frame(frame: pd.DataFrame, title: str) -> None:
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(str(column))
    for row in frame.itertuples(index=False):
        table.add_row(*("" if value is None else str(value) for value in row))
    console.print(table)
