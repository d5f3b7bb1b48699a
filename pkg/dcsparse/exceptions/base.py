"""
Custom exceptions carrying a CLI exit code and structured details

Usage in library code:
    if spec.shape is None:
        raise ParameterDomainError("SCAD requires a shape parameter")

    if X.shape[0] != y.shape[0]:
        raise ShapeError("design/response row mismatch", {"rows": X.shape[0], "n": y.shape[0]})

None of these derive from ValueError: pydantic validators re-raise them unchanged
instead of wrapping them into a ValidationError.
"""
from enum import IntEnum
from typing import Optional, Any, Dict


class ExitCode(IntEnum):
    """Process exit codes of the batch CLI"""

    SUCCESS = 0
    INPUT_ERROR = 1
    NOT_CONVERGED = 2


class DcSparseException(Exception):
    """Base dcsparse exception"""

    def __init__(
        self,
        message: str,
        exit_code: ExitCode = ExitCode.INPUT_ERROR,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


# Input errors

class ParameterDomainError(DcSparseException):
    """A parameter lies outside its admissible domain"""

    def __init__(self, message: str = "Parameter outside its domain", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class ShapeError(DcSparseException):
    """Array dimensions disagree"""

    def __init__(self, message: str = "Dimension mismatch", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class ResponseDomainError(DcSparseException):
    """Response values are invalid for the chosen loss"""

    def __init__(self, message: str = "Response outside the loss domain", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class ParseError(DcSparseException):
    """Malformed input file; details carry the offending line when known"""

    def __init__(self, message: str = "Malformed input", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class UnsupportedFamilyError(DcSparseException):
    """Operation is undefined for the requested penalty family"""

    def __init__(self, message: str = "Unsupported penalty family", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


# Numerical errors

class SingularDesignError(DcSparseException):
    """Restricted design X_S is rank deficient"""

    def __init__(self, message: str = "Singular restricted design", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class RegimeError(DcSparseException):
    """Restricted strong convexity margin is nonpositive"""

    def __init__(self, message: str = "RSC margin is nonpositive", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)


class NumericalFailureError(DcSparseException):
    """Objective became non-finite; details["trace"] holds the objective trace so far"""

    def __init__(self, message: str = "Non-finite objective", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ExitCode.INPUT_ERROR, details)
