"""
Report Schemas
Row models behind the CSV outputs of the bound checks and experiments

Every model is flat so that one instance maps onto one CSV row.
"""
from typing import Iterable, List, Optional, Type

import pandas as pd
from pydantic import BaseModel, Field


class BoundReport(BaseModel):
    """
    Observed error against a theoretical bound

    Usage:
        report = BoundReport.compare(observed=0.4, bound=1.2)
        report.satisfied  # True
    """
    observed: float = Field(ge=0, description="Measured error")
    bound: float = Field(ge=0, description="Theoretical upper bound")
    satisfied: bool = Field(description="observed <= bound")
    slack_ratio: float = Field(description="observed / bound")
    stated_bound: Optional[float] = Field(default=None, description="Alternative form of the bound")
    stated_satisfied: Optional[bool] = Field(default=None, description="observed <= stated_bound")

    @classmethod
    def compare(cls, observed: float, bound: float, stated_bound: Optional[float] = None) -> "BoundReport":
        if bound > 0:
            ratio = observed / bound
        else:
            ratio = 0.0 if observed == 0 else float("inf")
        return cls(
            observed=observed,
            bound=bound,
            satisfied=observed <= bound,
            slack_ratio=ratio,
            stated_bound=stated_bound,
            stated_satisfied=None if stated_bound is None else observed <= stated_bound,
        )


class ReplicateRecord(BaseModel):
    """
    One replicate of a Monte Carlo experiment

    Columns that do not apply to an experiment stay empty in the CSV.
    """
    replicate: int
    seed: int
    failure: Optional[str] = None
    converged: Optional[bool] = None
    outer_iters: Optional[int] = None
    nonzeros: Optional[int] = None
    is_d_stationary: Optional[bool] = None
    max_violation: Optional[float] = None
    re_gamma: Optional[float] = None
    estimation_error: Optional[float] = None
    estimation_bound: Optional[float] = None
    estimation_satisfied: Optional[bool] = None
    prediction_error: Optional[float] = None
    prediction_bound: Optional[float] = None
    prediction_satisfied: Optional[bool] = None
    prediction_stated_bound: Optional[float] = None
    support_match: Optional[bool] = None
    oracle_linf_gap: Optional[float] = None
    oracle_equal: Optional[bool] = None
    oracle_linf_error: Optional[float] = None
    oracle_linf_bound: Optional[float] = None
    oracle_linf_satisfied: Optional[bool] = None
    assumption8_holds: Optional[bool] = None
    cone_member: Optional[bool] = None
    gradient_condition: Optional[bool] = None
    derivative_condition: Optional[bool] = None
    glm_bound: Optional[float] = None
    glm_satisfied: Optional[bool] = None
    existence_radius: Optional[float] = None
    in_existence_ball: Optional[bool] = None


class ExperimentSummary(BaseModel):
    """Aggregate row of an experiment"""
    experiment: str
    replicates: int = Field(ge=1)
    failures: int = Field(ge=0)
    converged_rate: Optional[float] = None
    primary_rate: Optional[float] = Field(
        default=None, description="Rate of the experiment's headline check; empty when it was never evaluated"
    )
    evaluated: int = Field(default=0, ge=0, description="Replicates in which the headline check was evaluated")
    secondary_rate: Optional[float] = Field(default=None, description="Rate of the follow-up check")
    audited: Optional[int] = Field(default=None, description="Replicates passing the assumption audit")
    existence_ball_rate: Optional[float] = Field(
        default=None, description="Share of replicates whose estimate lies in the existence ball"
    )


def to_frame(records: Iterable[BaseModel], model: Optional[Type[BaseModel]] = None) -> pd.DataFrame:
    """
    DataFrame of records with columns in field order

    An empty iterable yields an empty frame carrying the columns of `model`.
    """
    rows: List[BaseModel] = list(records)
    if model is None and rows:
        model = type(rows[0])
    columns = list(model.model_fields) if model is not None else []
    return pd.DataFrame([row.model_dump() for row in rows], columns=columns)
