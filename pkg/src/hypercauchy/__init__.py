"""Explicit solutions of a singular characteristic Cauchy problem via the
Gauss hypergeometric function, with tools for continuation, classification
and residual verification."""

from .classify import CaseTag, ClassificationReport, classify, ramification_witness
from .continuation import (
    LoopPath,
    MonodromyResult,
    continue_ode,
    loop_around_infinity,
    loop_around_one,
    monodromy_K1,
    monodromy_K2,
    trivial_loop,
)
from .errors import (
    BasepointInvalid,
    DegenerateParams,
    DivisionByZero,
    HyperCauchyError,
    NoConvergence,
    NotDegenerate,
    OutsideDomain,
    PoleError,
    PreconditionViolation,
    SingularityTooClose,
    SingularPoint,
    StepFailure,
    UniquenessWarning,
)
from .problem import ProblemSpec, Root, alpha_roots, char_distance, char_map, derive_params
from .solution import (
    MonomialSolution,
    NullSolution,
    SeriesSolution,
    build_monomial,
    build_null_solution,
    build_series,
    eval_series,
    in_convergence_domain,
)
from .specfun import PRINCIPAL, BranchContext, GhfParams, Loop, gamma, ghf_eval, ghf_route
from .verify import ResidualReport, cauchy_data_check, residual

__version__ = "0.1.0"

__all__ = [
    "BasepointInvalid", "BranchContext", "CaseTag", "ClassificationReport", "DegenerateParams",
    "DivisionByZero", "GhfParams", "HyperCauchyError", "Loop", "LoopPath", "MonodromyResult",
    "MonomialSolution", "NoConvergence", "NotDegenerate", "NullSolution", "OutsideDomain",
    "PRINCIPAL", "PoleError", "PreconditionViolation", "ProblemSpec", "ResidualReport", "Root",
    "SeriesSolution", "SingularPoint", "SingularityTooClose", "StepFailure", "UniquenessWarning",
    "alpha_roots", "build_monomial", "build_null_solution", "build_series", "cauchy_data_check",
    "char_distance", "char_map", "classify", "continue_ode", "derive_params", "eval_series",
    "gamma", "ghf_eval", "ghf_route", "in_convergence_domain", "loop_around_infinity",
    "loop_around_one", "monodromy_K1", "monodromy_K2", "ramification_witness", "residual",
    "trivial_loop",
]
