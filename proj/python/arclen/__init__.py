"""Arc length by polygonal approximation, Euler sums and exact catalogs."""

from ._arclen import (
    DifferentiationError,
    EvalError,
    ExerciseError,
    Expr,
    ParseError,
    arc_integrand,
    arc_length,
    differentiate,
    error_bound,
    euler_cross_check,
    euler_sum,
    evaluate,
    format,
    min_subdivisions,
    neil_reduce,
    parse,
    polygonal_length,
    polygonal_table,
    problem_names,
    round4,
    run_cli,
    simplify,
    verify_problem,
)

__all__ = [
    "DifferentiationError",
    "EvalError",
    "ExerciseError",
    "Expr",
    "ParseError",
    "arc_integrand",
    "arc_length",
    "differentiate",
    "error_bound",
    "euler_cross_check",
    "euler_sum",
    "evaluate",
    "format",
    "min_subdivisions",
    "neil_reduce",
    "parse",
    "polygonal_length",
    "polygonal_table",
    "problem_names",
    "round4",
    "run_cli",
    "simplify",
    "verify_problem",
]
