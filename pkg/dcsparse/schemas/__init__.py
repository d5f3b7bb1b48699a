from dcsparse.schemas.reports import (
    BoundReport,
    ExperimentSummary,
    ReplicateRecord,
    to_frame,
)

__all__ = [
    "BoundReport",
    "ExperimentSummary",
    "ReplicateRecord",
    "to_frame",
]
