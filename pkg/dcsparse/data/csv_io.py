"""
CSV datasets, truth sidecars and coefficient files

Datasets have one header row `y,x1,...,xp`; values are written with 17 significant
digits and LF line endings so a write/read cycle reproduces every float.
"""
import io
import re
from pathlib import Path
from typing import IO, Union

import numpy as np
import pandas as pd

from dcsparse.data.synthetic import SyntheticTruth
from dcsparse.exceptions import ParseError, ShapeError
from dcsparse.losses import LossKind, Problem
from dcsparse.utils import ensure_parent, read_text

FLOAT_FORMAT = "%.17g"
TRUTH_COLUMNS = ["coordinate", "beta_star", "in_support", "sigma", "seed"]
COEFFICIENT_COLUMNS = ["coordinate", "beta_hat"]

Target = Union[str, Path, IO[str]]

_LINE_PATTERN = re.compile(r"line (\d+)")


def problem_frame(problem: Problem) -> pd.DataFrame:
    columns = {"y": problem.response}
    for j in range(problem.p):
        columns[f"x{j + 1}"] = problem.design[:, j]
    return pd.DataFrame(columns)


def write_frame(target: Target, frame: pd.DataFrame) -> None:
    """Write a DataFrame as CSV to a path or an open text stream"""
    if isinstance(target, (str, Path)):
        target = ensure_parent(target)
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_csv(target: Target, payload: Union[Problem, pd.DataFrame]) -> None:
    frame = problem_frame(payload) if isinstance(payload, Problem) else payload
    write_frame(target, frame)


def _read_raw(path: Union[str, Path]) -> pd.DataFrame:
    text = read_text(path)
    if not text.strip():
        raise ParseError("input file is empty", {"path": str(path)})
    # header=None makes the header row count toward the field check
    try:
        raw = pd.read_csv(io.StringIO(text), header=None, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError as exc:
        raise ParseError("input file is empty", {"path": str(path)}) from exc
    except pd.errors.ParserError as exc:
        match = _LINE_PATTERN.search(str(exc))
        details = {"path": str(path)}
        if match:
            details["line"] = int(match.group(1))
        raise ShapeError("inconsistent number of fields", details) from exc
    frame = raw.iloc[1:].reset_index(drop=True)
    frame.columns = [str(name) for name in raw.iloc[0]]
    return frame


def read_numeric_frame(path: Union[str, Path]) -> pd.DataFrame:
    """
    Read a CSV whose cells must all be numbers

    Line numbers in errors count the header as line 1.

    Raises:
        ParseError: empty file or a non-numeric cell
        ShapeError: no data rows or rows with missing fields
    """
    raw = _read_raw(path)
    if raw.shape[0] == 0:
        raise ShapeError("file has a header but no data rows", {"path": str(path), "n": 0})

    missing = raw.isna() | (raw == "")
    if missing.to_numpy().any():
        row = int(np.flatnonzero(missing.to_numpy().any(axis=1))[0])
        raise ShapeError("row has missing fields", {"path": str(path), "line": row + 2})

    numeric = raw.apply(pd.to_numeric, errors="coerce")
    invalid = numeric.isna().to_numpy()
    if invalid.any():
        row, col = (int(i[0]) for i in np.nonzero(invalid))
        raise ParseError(
            f"non-numeric value {raw.iat[row, col]!r} in column {raw.columns[col]!r}",
            {"path": str(path), "line": row + 2, "column": str(raw.columns[col])},
        )
    return raw.astype(float)


def read_csv(path: Union[str, Path], loss: LossKind = LossKind.SQUARED) -> Problem:
    """
    Load a dataset: first column is the response, the rest are predictors

    Example:
        problem = read_csv("data/train.csv", loss="logistic")
    """
    frame = read_numeric_frame(path)
    if frame.shape[1] < 2:
        raise ShapeError("dataset needs a response and at least one predictor", {"path": str(path)})
    values = frame.to_numpy()
    return Problem(values[:, 1:], values[:, 0], LossKind(loss))


def write_truth(target: Target, truth: SyntheticTruth) -> None:
    p = truth.beta_star.shape[0]
    in_support = np.zeros(p, dtype=int)
    in_support[truth.support] = 1
    frame = pd.DataFrame({
        "coordinate": np.arange(1, p + 1),
        "beta_star": truth.beta_star,
        "in_support": in_support,
        "sigma": np.full(p, truth.sigma),
        "seed": np.full(p, truth.seed, dtype=np.uint64),
    })
    write_frame(target, frame)


def _require_columns(frame: pd.DataFrame, columns, path) -> None:
    absent = [name for name in columns if name not in frame.columns]
    if absent:
        raise ParseError(f"missing columns {absent}", {"path": str(path)})


def read_truth(path: Union[str, Path]) -> SyntheticTruth:
    raw = _read_raw(path)
    _require_columns(raw, TRUTH_COLUMNS, path)
    if raw.shape[0] == 0:
        raise ShapeError("truth file has no rows", {"path": str(path)})
    try:
        beta_star = raw["beta_star"].astype(float).to_numpy()
        in_support = raw["in_support"].astype(int).to_numpy()
        sigma = float(raw["sigma"].iloc[0])
        seed = int(raw["seed"].iloc[0])
    except ValueError as exc:
        raise ParseError("truth file holds non-numeric values", {"path": str(path)}) from exc
    return SyntheticTruth(
        beta_star=beta_star,
        support=np.flatnonzero(in_support),
        sigma=sigma,
        seed=seed,
    )


def coefficient_frame(beta: np.ndarray) -> pd.DataFrame:
    beta = np.asarray(beta, dtype=float).reshape(-1)
    return pd.DataFrame({"coordinate": np.arange(1, beta.shape[0] + 1), "beta_hat": beta})


def write_coefficients(target: Target, beta: np.ndarray) -> None:
    write_frame(target, coefficient_frame(beta))


def read_coefficients(path: Union[str, Path]) -> np.ndarray:
    frame = read_numeric_frame(path)
    _require_columns(frame, COEFFICIENT_COLUMNS, path)
    return frame["beta_hat"].to_numpy(dtype=float)
