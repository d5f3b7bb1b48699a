"""
Logging System
=============
Structured logging with colored console and JSON output on stderr.

Usage:
    from dcsparse.logging import setup_logging_from_settings, get_logger

    setup_logging_from_settings(settings)

    logger = get_logger(__name__)
    logger.info("Fit finished")
"""
from dcsparse.logging.setup import (
    setup_logging,
    setup_logging_from_settings,
    get_logger,
    ColoredFormatter,
    JSONFormatter,
    ReplicateLoggerAdapter,
)

__all__ = [
    "setup_logging",
    "setup_logging_from_settings",
    "get_logger",
    "ColoredFormatter",
    "JSONFormatter",
    "ReplicateLoggerAdapter",
]
