"""Ratings of criteria from pairwise comparisons.

Principal eigenvector, geometric mean and tropical log-Chebyshev
approximation (best and worst differentiating solutions), plus rank
statistics over batches of survey respondents.
"""

__version__ = "0.1.0"

from .matrices import ComparisonMatrix, RatingVector, ValidationError, validate_reciprocity
from .maxplus import (
    SpectralRadiusExceedsOne,
    conjugate_transpose,
    hilbert_seminorm,
    is_linearly_dependent,
    kleene_star,
    spectral_radius,
    trop_add,
    trop_mul,
    trop_power,
    trop_trace,
)
from .methods import (
    ConvergenceFailure,
    SolutionCone,
    best_differentiating,
    geometric_mean_rate,
    log_chebyshev_objective,
    log_chebyshev_rate,
    principal_eigenvector_rate,
    prune_columns,
    rate_all,
    solve_cone,
    worst_differentiating,
)
from .ranking import RankVector, combined_order_string, interval_combine, order_string, ranks_from_ratings
from .survey import ParseError, SurveyBatch, SurveyRecord, parse_batch, serialize_batch, serialize_report
from .report import AnalysisReport, analyze_record, build_report
from .stats import (
    chebyshev_rank_distance,
    concatenated_correlation,
    frequency_table,
    hamming_rank_distance,
    kendall_tau,
    match_table,
    mean_and_std,
    pearson,
    within_distance_counts,
)

__all__ = [
    "ComparisonMatrix",
    "RatingVector",
    "ValidationError",
    "validate_reciprocity",
    "SpectralRadiusExceedsOne",
    "conjugate_transpose",
    "hilbert_seminorm",
    "is_linearly_dependent",
    "kleene_star",
    "spectral_radius",
    "trop_add",
    "trop_mul",
    "trop_power",
    "trop_trace",
    "ConvergenceFailure",
    "SolutionCone",
    "best_differentiating",
    "geometric_mean_rate",
    "log_chebyshev_objective",
    "log_chebyshev_rate",
    "principal_eigenvector_rate",
    "prune_columns",
    "rate_all",
    "solve_cone",
    "worst_differentiating",
    "RankVector",
    "combined_order_string",
    "interval_combine",
    "order_string",
    "ranks_from_ratings",
    "ParseError",
    "SurveyBatch",
    "SurveyRecord",
    "parse_batch",
    "serialize_batch",
    "serialize_report",
    "AnalysisReport",
    "analyze_record",
    "build_report",
    "chebyshev_rank_distance",
    "concatenated_correlation",
    "frequency_table",
    "hamming_rank_distance",
    "kendall_tau",
    "match_table",
    "mean_and_std",
    "pearson",
    "within_distance_counts",
]
