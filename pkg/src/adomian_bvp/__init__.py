"""Closed-form series solutions of doubly singular two-point boundary value problems.

The pipeline: parse a nonlinearity f(x, y, yp), expand it into decomposition
polynomials through a truncated ring, invert the singular operator
(x^alpha u')' term by term in closed form, and accumulate solution
components whose partial sums satisfy both boundary conditions exactly.
"""

from . import benchmarks, diagnostics, problem_file
from .diagnostics import ErrorReport, max_error, quadrature_oracle, residual
from .errors import AdmError, ComputeError, InputError
from .expressions import Expr, eval_lambda, eval_real, free_vars, parse, to_source
from .lambda_ring import LambdaSeries, extract_adomian, lift_solution
from .series import GPSeries, Term, format_series, normalize
from .singular_operator import (
    OperatorContext,
    apply_forward,
    apply_inverse,
    h_series,
    inverse_at_one,
)
from .solver import Problem, SolveReport, partial_sum, solve

__all__ = [
    "AdmError",
    "ComputeError",
    "ErrorReport",
    "Expr",
    "GPSeries",
    "InputError",
    "LambdaSeries",
    "OperatorContext",
    "Problem",
    "SolveReport",
    "Term",
    "apply_forward",
    "apply_inverse",
    "benchmarks",
    "diagnostics",
    "eval_lambda",
    "eval_real",
    "extract_adomian",
    "format_series",
    "free_vars",
    "h_series",
    "inverse_at_one",
    "lift_solution",
    "max_error",
    "normalize",
    "parse",
    "partial_sum",
    "problem_file",
    "quadrature_oracle",
    "residual",
    "solve",
    "to_source",
]

__version__ = "0.1.0"
