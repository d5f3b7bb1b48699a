"""
dcsparse CLI
"""
from dcsparse.cli.main import app

__all__ = ["app"]
