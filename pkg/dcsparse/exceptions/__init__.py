"""
Exception Handling
=================
Error taxonomy and CLI exit-code mapping for dcsparse.

Usage:
    from dcsparse.exceptions import ParameterDomainError, ShapeError, exit_on_error
"""
from dcsparse.exceptions.base import (
    ExitCode,
    DcSparseException,
    ParameterDomainError,
    ShapeError,
    ResponseDomainError,
    ParseError,
    UnsupportedFamilyError,
    SingularDesignError,
    RegimeError,
    NumericalFailureError,
)
from dcsparse.exceptions.handlers import handle_exception, exit_on_error

__all__ = [
    # Exceptions
    "ExitCode",
    "DcSparseException",
    "ParameterDomainError",
    "ShapeError",
    "ResponseDomainError",
    "ParseError",
    "UnsupportedFamilyError",
    "SingularDesignError",
    "RegimeError",
    "NumericalFailureError",
    # Handlers
    "handle_exception",
    "exit_on_error",
]
