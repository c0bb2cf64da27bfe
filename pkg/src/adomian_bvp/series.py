"""Arithmetic on finite sums of real powers of x.

A series here is a sparse, sorted list of ``coeff * x**exponent`` terms with
real (not necessarily integer) exponents.  Solution components, their
derivatives and partial sums are all values of this one type, so the whole
solver reduces to a handful of exact term-wise operations on it.

Values are immutable and every operation is a pure function; series can be
shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, NonFiniteTerm, TermBlowup

# Exponents arise from repeated addition of a handful of real increments;
# floating drift must not split one mathematical monomial into two.
EXPONENT_MERGE_TOL = 1e-12

# Coefficients this small relative to the largest one are numerical debris.
PRUNE_REL_THRESHOLD = 1e-14

# Products in the truncated-ring machinery grow combinatorially; fail loudly
# rather than thrash.
DEFAULT_TERM_CAP = 10_000


@dataclass(frozen=True)
class Term:
    """One monomial ``coeff * x**exponent``."""

    coeff: float
    exponent: float


@dataclass(frozen=True)
class GPSeries:
    """A finite sum of real powers of x, sorted by strictly increasing exponent.

    The empty tuple represents the zero series.  Build instances through
    :func:`normalize` or the constructors below; raw construction skips the
    merge/prune pass.
    """

    terms: tuple[Term, ...] = ()

    @staticmethod
    def zero() -> "GPSeries":
        return GPSeries()

    @staticmethod
    def constant(value: float) -> "GPSeries":
        return normalize([Term(float(value), 0.0)])

    @staticmethod
    def monomial(coeff: float, exponent: float) -> "GPSeries":
        return normalize([Term(float(coeff), float(exponent))])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)


def normalize(raw_terms: Iterable[Term | Sequence[float]]) -> GPSeries:
    """Sort terms, merge near-equal exponents, drop negligible coefficients.

    Terms whose exponents differ by at most ``EXPONENT_MERGE_TOL`` are summed
    into one; coefficients below ``PRUNE_REL_THRESHOLD`` times the largest
    surviving coefficient (and exact zeros) are dropped.  Idempotent.

    Raises:
        NonFiniteTerm: if any coefficient or exponent is NaN or infinite.
    """
    terms: list[Term] = []
    for t in raw_terms:
        if not isinstance(t, Term):
            t = Term(float(t[0]), float(t[1]))
        if not (math.isfinite(t.coeff) and math.isfinite(t.exponent)):
            raise NonFiniteTerm(f"term ({t.coeff!r}, {t.exponent!r}) is not finite")
        terms.append(t)
    if not terms:
        return GPSeries()

    terms.sort(key=lambda t: t.exponent)
    merged: list[Term] = [terms[0]]
    for t in terms[1:]:
        if t.exponent - merged[-1].exponent <= EXPONENT_MERGE_TOL:
            merged[-1] = Term(merged[-1].coeff + t.coeff, merged[-1].exponent)
        else:
            merged.append(t)

    largest = max(abs(t.coeff) for t in merged)
    kept = tuple(
        t for t in merged
        if t.coeff != 0.0 and abs(t.coeff) >= PRUNE_REL_THRESHOLD * largest
    )
    return GPSeries(kept)


def add(a: GPSeries, b: GPSeries) -> GPSeries:
    """Term-wise sum of two series."""
    return normalize(list(a.terms) + list(b.terms))


def scale(a: GPSeries, k: float) -> GPSeries:
    """Multiply every coefficient by the scalar k."""
    if k == 0.0:
        return GPSeries()
    return normalize([Term(t.coeff * k, t.exponent) for t in a.terms])


def mul(a: GPSeries, b: GPSeries, cap: int = DEFAULT_TERM_CAP) -> GPSeries:
    """Product of two series; exponents add pairwise.

    Raises:
        TermBlowup: if the raw pairwise product would exceed ``cap`` terms.
    """
    if len(a.terms) * len(b.terms) > cap:
        raise TermBlowup(
            f"product of {len(a.terms)} x {len(b.terms)} terms exceeds cap {cap}"
        )
    raw = [
        Term(ta.coeff * tb.coeff, ta.exponent + tb.exponent)
        for ta in a.terms
        for tb in b.terms
    ]
    return normalize(raw)


def differentiate(a: GPSeries) -> GPSeries:
    """Power-rule derivative; constant terms vanish."""
    raw = [
        Term(t.coeff * t.exponent, t.exponent - 1.0)
        for t in a.terms
        if abs(t.exponent) > EXPONENT_MERGE_TOL
    ]
    return normalize(raw)


def evaluate(a: GPSeries, x: float) -> float:
    """Sum c * x**e over all terms.

    For x > 0 every real exponent is fine.  x = 0 is permitted only when all
    exponents are nonnegative (with 0**0 := 1); x < 0 only when all exponents
    are nonnegative integers.

    Raises:
        DomainError: negative or fractional exponent at x <= 0.
    """
    if x > 0.0:
        return sum((t.coeff * x ** t.exponent for t in a.terms), 0.0)
    if x == 0.0:
        total = 0.0
        for t in a.terms:
            if t.exponent < -EXPONENT_MERGE_TOL:
                raise DomainError(f"x^{t.exponent:g} is singular at x = 0")
            if abs(t.exponent) <= EXPONENT_MERGE_TOL:
                total += t.coeff
        return total
    total = 0.0
    for t in a.terms:
        k = round(t.exponent)
        if k < 0 or abs(t.exponent - k) > EXPONENT_MERGE_TOL:
            raise DomainError(f"x^{t.exponent:g} is undefined for x = {x:g} < 0")
        total += t.coeff * x ** k
    return total


def evaluate_many(a: GPSeries, xs: np.ndarray) -> np.ndarray:
    """Vectorized :func:`evaluate` on a grid of strictly positive points."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs <= 0.0):
        raise DomainError("grid evaluation requires strictly positive points")
    out = np.zeros_like(xs)
    for t in a.terms:
        out += t.coeff * xs ** t.exponent
    return out


def format_series(a: GPSeries) -> str:
    """Render a series as ``{coeff:.10e}*x^{exponent:.6g}`` terms joined by ' + '."""
    if a.is_zero:
        return "0"
    return " + ".join(f"{t.coeff:.10e}*x^{t.exponent:.6g}" for t in a.terms)
