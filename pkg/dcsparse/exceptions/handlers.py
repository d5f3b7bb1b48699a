"""
CLI exception handling
Converts exceptions into exit codes and a readable error line
"""
import functools
from typing import Callable, Optional, TypeVar

import typer
from rich.console import Console
from rich.markup import escape

from dcsparse.exceptions.base import DcSparseException, ExitCode
from dcsparse.logging import get_logger

logger = get_logger(__name__)

F = TypeVar("F", bound=Callable)

error_console = Console(stderr=True)


def handle_exception(exc: BaseException, console: Optional[Console] = None) -> int:
    """
    Report an exception and return the exit code it maps to

    Args:
        exc: Raised exception
        console: Console for the user-facing message (stderr by default)

    Returns:
        Process exit code
    """
    console = console or error_console

    if isinstance(exc, DcSparseException):
        logger.info(
            f"Command failed: {exc.message}",
            extra={
                'extra_data': {
                    'error_type': type(exc).__name__,
                    'exit_code': int(exc.exit_code),
                    'details': {k: v for k, v in exc.details.items() if k != "trace"},
                }
            }
        )
        line = exc.details.get("line")
        suffix = f" (line {line})" if line is not None else ""
        console.print(f"[red]Error: {escape(exc.message)}{suffix}[/red]", markup=True, highlight=False)
        return int(exc.exit_code)

    logger.error(
        f"Unhandled exception: {str(exc)}",
        exc_info=exc,
        extra={'extra_data': {'error_type': type(exc).__name__}}
    )
    console.print(f"[red]Error: {escape(str(exc))}[/red]", markup=True, highlight=False)
    return int(ExitCode.INPUT_ERROR)


def exit_on_error(command: F) -> F:
    """
    Wrap a typer command so that failures become typer.Exit(code)

    Example:
        @exit_on_error
        def fit(...):
            ...
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except typer.Exit:
            raise
        except Exception as exc:
            raise typer.Exit(handle_exception(exc))

    return wrapper  # type: ignore[return-value]
