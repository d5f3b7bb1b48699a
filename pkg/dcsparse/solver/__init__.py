"""
DCA Solver
==========
Difference-of-convex algorithm with weighted-ℓ1 inner solves.

Usage:
    from dcsparse.solver import SolverConfig, dca_fit

    fit = dca_fit(problem, spec, SolverConfig(init="zero"))
"""
from dcsparse.solver.config import InitKind, SolverConfig
from dcsparse.solver.inner import InnerSolution, soft_threshold, weighted_l1_solve
from dcsparse.solver.dca import (
    FitResult,
    dca_fit,
    dca_weights,
    objective_value,
    relative_step,
)

__all__ = [
    "InitKind",
    "SolverConfig",
    "InnerSolution",
    "soft_threshold",
    "weighted_l1_solve",
    "FitResult",
    "dca_fit",
    "dca_weights",
    "objective_value",
    "relative_step",
]
