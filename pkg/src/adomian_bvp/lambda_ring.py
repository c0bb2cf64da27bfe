"""Truncated polynomial ring in the decomposition parameter.

Elements are polynomials of fixed truncation order N in a formal parameter
(written ``lam`` here) whose coefficients are :class:`~.series.GPSeries`.
Injecting the solution components as ``y_0 + y_1*lam + ... + y_N*lam^N`` and
pushing the nonlinearity through this ring yields its decomposition
polynomials A_n as the coefficient of ``lam^n`` — the 1/n! d^n/dlam^n at 0
of the composed series, obtained here by composition instead of repeated
symbolic differentiation.

exp/ln/recip compose around the order-zero coefficient, which therefore has
to be a constant.  The recursion that feeds this ring always starts from a
constant first component, so the restriction costs nothing in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import series as gps
from .errors import (
    DivisionByZeroSeries,
    LogOfNonPositive,
    NonConstantBasePoint,
    OrderMismatch,
)
from .series import GPSeries


@dataclass(frozen=True)
class LambdaSeries:
    """Truncated polynomial in the decomposition parameter.

    ``coeffs[k]`` is the series coefficient of the k-th power of the
    parameter; there are exactly ``order + 1`` slots.
    """

    coeffs: tuple[GPSeries, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def zero(order: int) -> "LambdaSeries":
        return LambdaSeries(tuple(GPSeries.zero() for _ in range(order + 1)))

    @staticmethod
    def constant(value: float, order: int) -> "LambdaSeries":
        return LambdaSeries.from_gpseries(GPSeries.constant(value), order)

    @staticmethod
    def from_gpseries(s: GPSeries, order: int) -> "LambdaSeries":
        """Embed a plain series as the order-zero coefficient."""
        rest = tuple(GPSeries.zero() for _ in range(order))
        return LambdaSeries((s,) + rest)


def _check_orders(a: LambdaSeries, b: LambdaSeries) -> None:
    if a.order != b.order:
        raise OrderMismatch(f"truncation orders differ: {a.order} vs {b.order}")


def lift_solution(
    components: list[GPSeries], order: int
) -> tuple[LambdaSeries, LambdaSeries]:
    """Inject solution components and their derivatives into the ring.

    Returns the pair (y, y') where component k sits at parameter power k.
    Missing components beyond ``len(components)`` are taken as zero.
    """
    padded = list(components[: order + 1])
    padded += [GPSeries.zero()] * (order + 1 - len(padded))
    y = LambdaSeries(tuple(padded))
    yp = LambdaSeries(tuple(gps.differentiate(c) for c in padded))
    return y, yp


def ring_add(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    _check_orders(a, b)
    return LambdaSeries(tuple(gps.add(x, y) for x, y in zip(a.coeffs, b.coeffs)))


def ring_scale(a: LambdaSeries, k: float) -> LambdaSeries:
    return LambdaSeries(tuple(gps.scale(c, k) for c in a.coeffs))


def ring_sub(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    return ring_add(a, ring_scale(b, -1.0))


def ring_mul(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = []
    for k in range(n + 1):
        acc = GPSeries.zero()
        for i in range(k + 1):
            if a.coeffs[i].is_zero or b.coeffs[k - i].is_zero:
                continue
            acc = gps.add(acc, gps.mul(a.coeffs[i], b.coeffs[k - i]))
        out.append(acc)
    return LambdaSeries(tuple(out))


def base_point(a: LambdaSeries) -> float:
    """The constant value of the order-zero coefficient.

    Raises:
        NonConstantBasePoint: if that coefficient is not a constant series.
    """
    c0 = a.coeffs[0]
    if c0.is_zero:
        return 0.0
    if len(c0) == 1 and abs(c0.terms[0].exponent) <= gps.EXPONENT_MERGE_TOL:
        return c0.terms[0].coeff
    raise NonConstantBasePoint(
        f"order-zero coefficient is not constant: {gps.format_series(c0)}"
    )


def _powers_of_fluctuation(a: LambdaSeries, a0: float) -> list[LambdaSeries]:
    """[u^0, u^1, ..., u^N] for u = a - a0, which has no order-zero part."""
    n = a.order
    u = ring_sub(a, LambdaSeries.constant(a0, n))
    powers = [LambdaSeries.constant(1.0, n)]
    for _ in range(n):
        powers.append(ring_mul(powers[-1], u))
    return powers


def ring_exp(a: LambdaSeries) -> LambdaSeries:
    """exp of a ring element with constant base point.

    Computed as exp(a0) * sum_j (a - a0)^j / j!; the sum is exact at the
    truncation order because a - a0 starts at parameter power one.
    """
    a0 = base_point(a)
    powers = _powers_of_fluctuation(a, a0)
    out = LambdaSeries.zero(a.order)
    for j, p in enumerate(powers):
        out = ring_add(out, ring_scale(p, 1.0 / math.factorial(j)))
    return ring_scale(out, math.exp(a0))


def ring_ln(a: LambdaSeries) -> LambdaSeries:
    """ln of a ring element with positive constant base point."""
    a0 = base_point(a)
    if a0 <= 0.0:
        raise LogOfNonPositive(f"ln of base point {a0:g}")
    powers = _powers_of_fluctuation(ring_scale(a, 1.0 / a0), 1.0)
    out = LambdaSeries.constant(math.log(a0), a.order)
    for j in range(1, a.order + 1):
        out = ring_add(out, ring_scale(powers[j], (-1.0) ** (j + 1) / j))
    return out


def ring_recip(a: LambdaSeries) -> LambdaSeries:
    """Reciprocal of a ring element with nonzero constant base point."""
    a0 = base_point(a)
    if a0 == 0.0:
        raise DivisionByZeroSeries("reciprocal of a ring element with zero base point")
    powers = _powers_of_fluctuation(ring_scale(a, 1.0 / a0), 1.0)
    out = LambdaSeries.zero(a.order)
    for j, p in enumerate(powers):
        out = ring_add(out, ring_scale(p, (-1.0) ** j))
    return ring_scale(out, 1.0 / a0)


def ring_powi(a: LambdaSeries, k: int) -> LambdaSeries:
    """Integer power by repeated multiplication; negative k via reciprocal."""
    if k < 0:
        return ring_powi(ring_recip(a), -k)
    out = LambdaSeries.constant(1.0, a.order)
    for _ in range(k):
        out = ring_mul(out, a)
    return out


def extract_adomian(f_of_lambda: LambdaSeries, n: int) -> GPSeries:
    """Coefficient of parameter power n: the n-th decomposition polynomial.

    Raises:
        OrderMismatch: if n exceeds the truncation order.
    """
    if n > f_of_lambda.order:
        raise OrderMismatch(
            f"coefficient {n} requested from order-{f_of_lambda.order} element"
        )
    return f_of_lambda.coeffs[n]
