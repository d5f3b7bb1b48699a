"""
Synthetic Data and CSV I/O
==========================

Usage:
    from dcsparse.data import SyntheticSpec, generate, write_csv, read_csv

    problem, truth = generate(SyntheticSpec(n=200, p=400, s=5, seed=1))
    write_csv("train.csv", problem)
"""
from dcsparse.data.synthetic import (
    NoiseKind,
    SyntheticSpec,
    SyntheticTruth,
    generate,
    make_rng,
    replicate_seed,
    standardize_columns,
)
from dcsparse.data.csv_io import (
    coefficient_frame,
    problem_frame,
    read_coefficients,
    read_csv,
    read_numeric_frame,
    read_truth,
    write_coefficients,
    write_csv,
    write_frame,
    write_truth,
)

__all__ = [
    "NoiseKind",
    "SyntheticSpec",
    "SyntheticTruth",
    "generate",
    "make_rng",
    "replicate_seed",
    "standardize_columns",
    "coefficient_frame",
    "problem_frame",
    "read_coefficients",
    "read_csv",
    "read_numeric_frame",
    "read_truth",
    "write_coefficients",
    "write_csv",
    "write_frame",
    "write_truth",
]
