"""Spectral machinery for Hill operators -y'' + v*y with distributional
potentials v = Q' (Q square-integrable, pi-periodic, mean zero).

The heavy lifting lives in the compiled core; this package re-exports it.
"""

from ._core import (
    AcceptanceSummary,
    Bc,
    CaseRow,
    CheckResult,
    CriterionReport,
    DecayReport,
    FloquetOracle,
    GapCase,
    HillSpectraError,
    OraclePair,
    PotentialSpec,
    ProjectionContext,
    ProjectionReport,
    ProjectionRow,
    RadiusPolicy,
    ReducedMatrix,
    SandwichReport,
    SandwichRow,
    SlateRow,
    SpectralSlate,
    TruncatedOperator,
    Weight,
    bc_for_mode,
    build_matrix,
    build_slate,
    case_table,
    characteristic_residual,
    decay_classify,
    dir_deviation_sequence,
    eigenvalues,
    gap_sequence,
    make_projection_context,
    neu_deviation_sequence,
    projection_norms,
    projection_row,
    reduce_2x2,
    reduction_roots,
    riesz_criterion,
    run_acceptance,
    sandwich_report,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptanceSummary",
    "Bc",
    "CaseRow",
    "CheckResult",
    "CriterionReport",
    "DecayReport",
    "FloquetOracle",
    "GapCase",
    "HillSpectraError",
    "OraclePair",
    "PotentialSpec",
    "ProjectionContext",
    "ProjectionReport",
    "ProjectionRow",
    "RadiusPolicy",
    "ReducedMatrix",
    "SandwichReport",
    "SandwichRow",
    "SlateRow",
    "SpectralSlate",
    "TruncatedOperator",
    "Weight",
    "bc_for_mode",
    "build_matrix",
    "build_slate",
    "case_table",
    "characteristic_residual",
    "decay_classify",
    "dir_deviation_sequence",
    "eigenvalues",
    "gap_sequence",
    "make_projection_context",
    "neu_deviation_sequence",
    "projection_norms",
    "projection_row",
    "reduce_2x2",
    "reduction_roots",
    "riesz_criterion",
    "run_acceptance",
    "sandwich_report",
    "__version__",
]
