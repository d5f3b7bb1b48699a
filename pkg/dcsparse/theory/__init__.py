"""
Theory Harness
==============
Cones, restricted eigenvalue estimates, error bounds and Monte Carlo experiments.

Usage:
    from dcsparse.theory import select_lambda, support_recovery_experiment

    lam = select_lambda(sigma=1.0, tau=3.0, n=200, p=400)
"""
from dcsparse.theory.cone import (
    ConeRegime,
    ConeSpec,
    cone_membership,
    estimate_re_constant,
    sample_cone_directions,
)
from dcsparse.theory.bounds import (
    GlmAudit,
    audit_glm_assumptions,
    check_estimation_bound,
    check_glm_bound,
    check_prediction_bound,
    check_rsc_composite,
    existence_ball,
    oracle_linf_bound,
    select_lambda,
)
from dcsparse.theory.experiments import (
    ExperimentKind,
    ExperimentResult,
    ReplicateTask,
    glm_bound_experiment,
    oracle_bound_experiment,
    run_experiment,
    run_replicate,
    run_replicates,
    summarize,
    support_recovery_experiment,
)

__all__ = [
    "ConeRegime",
    "ConeSpec",
    "cone_membership",
    "estimate_re_constant",
    "sample_cone_directions",
    "GlmAudit",
    "audit_glm_assumptions",
    "check_estimation_bound",
    "check_glm_bound",
    "check_prediction_bound",
    "check_rsc_composite",
    "existence_ball",
    "oracle_linf_bound",
    "select_lambda",
    "ExperimentKind",
    "ExperimentResult",
    "ReplicateTask",
    "glm_bound_experiment",
    "oracle_bound_experiment",
    "run_experiment",
    "run_replicate",
    "run_replicates",
    "summarize",
    "support_recovery_experiment",
]
