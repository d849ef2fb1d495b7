"""Zeta factorization of Dwork hypersurfaces."""

from ._dwork import (
    DworkError,
    acceptance_criterion,
    count_points,
    criteria,
    fixed_count,
    oracle_fixed_count,
    predict,
    predict_markdown,
    prim_dimension,
    set_jobs,
    verify_rep,
    zeta,
)

__all__ = [
    "DworkError",
    "acceptance_criterion",
    "count_points",
    "criteria",
    "fixed_count",
    "oracle_fixed_count",
    "predict",
    "predict_markdown",
    "prim_dimension",
    "set_jobs",
    "verify_rep",
    "zeta",
]
