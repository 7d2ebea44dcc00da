"""Simultaneous Waring decompositions of binary forms via apolarity."""

from ._core import (
    InvalidInput,
    NumericFailure,
    decompose,
    graded_intersection_dim,
    kmin,
    kmin_formula,
    predict,
    run_cli,
    vssp_dim_formula,
)

__all__ = [
    "InvalidInput",
    "NumericFailure",
    "decompose",
    "graded_intersection_dim",
    "kmin",
    "kmin_formula",
    "predict",
    "run_cli",
    "vssp_dim_formula",
]
