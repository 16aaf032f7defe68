"""Dominating tree metrics (2-HSTs, ultrametrics) and low-routing-cost spanning trees."""

from ._core import (
    DELTA0,
    Metric,
    constrained_cut,
    embed,
    embed_points,
    line_dp_optimal,
    lower_bound_ratio,
    metric_from_points,
    optimal_cut,
    scan,
    spantree,
    validate_metric,
)

__all__ = [
    "DELTA0",
    "Metric",
    "constrained_cut",
    "embed",
    "embed_points",
    "line_dp_optimal",
    "lower_bound_ratio",
    "metric_from_points",
    "optimal_cut",
    "scan",
    "spantree",
    "validate_metric",
]
