"""Decomposition recursion for the doubly singular two-point problem.

Solves (x^alpha y')' = x^sigma f(x, y, y') on (0, 1] with y(0) = eta1 and
the Robin condition alpha1*y(1) + beta1*y'(1) = gamma1, by building solution
components as closed-form series:

    y_0     = eta1
    y_1     = (gamma1 - alpha1*eta1)/D * h  +  correction(A_0)
    y_(k+1) = correction(A_k),   k >= 1

where h(x) = x^(1-alpha)/(1-alpha), D = alpha1*h(1) + beta1*h'(1), A_k is
the k-th decomposition polynomial of f, and

    correction(A) = (alpha1/D) * [inverse image of A at 1] * h
                    - inverse image of A.

Each correction contributes zero to the Robin combination at x = 1 and
vanishes at x = 0, so every partial sum satisfies both boundary conditions
by construction — no algebraic equations for unknown constants arise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import series as gps
from .errors import AdmError, InvalidExactSolution
from .expressions import Expr, eval_lambda, free_vars
from .lambda_ring import extract_adomian, lift_solution
from .series import GPSeries
from .singular_operator import OperatorContext, apply_inverse, h_series, inverse_at_one


@dataclass(frozen=True)
class Problem:
    """One boundary value problem instance.

    ``f`` is the source nonlinearity over {x, y, yp}; ``exact``, when given,
    is a reference solution over {x} used only by the diagnostics.
    """

    alpha: float
    sigma: float
    f: Expr
    eta1: float
    alpha1: float
    beta1: float
    gamma1: float
    exact: Expr | None = None

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if not self.alpha1 > 0.0:
            raise ValueError(f"alpha1 must be positive, got {self.alpha1!r}")
        if not self.beta1 >= 0.0:
            raise ValueError(f"beta1 must be nonnegative, got {self.beta1!r}")
        extra = free_vars(self.f) - {"x", "y", "yp"}
        if extra:
            raise ValueError(f"f mentions unknown variables {sorted(extra)}")
        if self.exact is not None and free_vars(self.exact) - {"x"}:
            raise InvalidExactSolution(
                "exact solution may only mention x, got "
                f"variables {sorted(free_vars(self.exact))}"
            )
        # Positive alpha1 and h(1) > 0 already force this; assert anyway.
        if self.mixing_denominator == 0.0:
            raise ValueError("degenerate boundary data: alpha1*h(1) + beta1*h'(1) = 0")

    @property
    def operator_context(self) -> OperatorContext:
        return OperatorContext(self.alpha, self.sigma)

    @property
    def mixing_denominator(self) -> float:
        ctx = OperatorContext(self.alpha, self.sigma)
        return self.alpha1 * ctx.h1 + self.beta1 * ctx.hp1


@dataclass(frozen=True)
class StepInfo:
    """Per-component bookkeeping: series size and wall time of one step."""

    step: int
    terms: int
    seconds: float


@dataclass(frozen=True)
class SolveReport:
    """Components y_0 ... y_(n-1), their sum psi, and per-step diagnostics."""

    components: tuple[GPSeries, ...]
    psi: GPSeries
    n: int
    diagnostics: tuple[StepInfo, ...] = field(default_factory=tuple)


def _adomian_polynomial(f: Expr, components: list[GPSeries], k: int) -> GPSeries:
    """A_k for the current components: coefficient k of f pushed through the ring."""
    y_lam, yp_lam = lift_solution(components, k)
    return extract_adomian(eval_lambda(f, y_lam, yp_lam), k)


def solve(problem: Problem, n: int = 10) -> SolveReport:
    """Run the recursion for n components and return them with their sum.

    Raises:
        ValueError: n < 1.
        AdmError: ring/operator failures, re-raised tagged with the step index.
    """
    if n < 1:
        raise ValueError(f"need at least one component, got n = {n!r}")

    ctx = problem.operator_context
    H = h_series(ctx)
    D = problem.mixing_denominator

    components: list[GPSeries] = [GPSeries.constant(problem.eta1)]
    diagnostics: list[StepInfo] = [StepInfo(0, len(components[0]), 0.0)]

    for k in range(n - 1):
        started = time.perf_counter()
        try:
            a_k = _adomian_polynomial(problem.f, components, k)
            bleed = inverse_at_one(ctx, a_k)
            y_next = gps.add(
                gps.scale(H, problem.alpha1 * bleed / D),
                gps.scale(apply_inverse(ctx, a_k), -1.0),
            )
            if k == 0:
                inhomogeneous = (problem.gamma1 - problem.alpha1 * problem.eta1) / D
                y_next = gps.add(y_next, gps.scale(H, inhomogeneous))
        except AdmError as err:
            raise type(err)(f"component {k + 1}: {err}") from err
        components.append(y_next)
        diagnostics.append(
            StepInfo(k + 1, len(y_next), time.perf_counter() - started)
        )

    psi = GPSeries.zero()
    for c in components:
        psi = gps.add(psi, c)
    return SolveReport(tuple(components), psi, n, tuple(diagnostics))


def partial_sum(report: SolveReport, m: int) -> GPSeries:
    """Sum of the first m components, 1 <= m <= n."""
    if not 1 <= m <= report.n:
        raise ValueError(f"m must lie in [1, {report.n}], got {m!r}")
    out = GPSeries.zero()
    for c in report.components[:m]:
        out = gps.add(out, c)
    return out
