"""Closed-form inverse operator against independent quadrature and identities."""

import mpmath as mp
import numpy as np
import pytest

from adomian_bvp.errors import Divergent, LogResonance, OuterResonance
from adomian_bvp.series import GPSeries, Term, add, evaluate, normalize, scale
from adomian_bvp.singular_operator import (
    OperatorContext,
    apply_forward,
    apply_inverse,
    h_series,
    inverse_at_one,
)


def _terms(series):
    return [(t.coeff, t.exponent) for t in series.terms]


def nested_integral(alpha, sigma, g, x, dps=20):
    """Independent oracle: the raw double integral via tanh-sinh quadrature."""
    with mp.workdps(dps):
        terms = [(t.coeff, t.exponent + sigma) for t in g.terms]

        def inner(s):
            return mp.quad(lambda t: sum(c * t**r for c, r in terms), [s, 1])

        val = mp.quad(lambda s: s ** (-alpha) * inner(s), [0, x])
        return float(val)


# --- context and h -------------------------------------------------------------


def test_context_validation():
    OperatorContext(0.0, -1.0)
    with pytest.raises(ValueError):
        OperatorContext(1.0, 0.0)
    with pytest.raises(ValueError):
        OperatorContext(-0.1, 0.0)


def test_h_series_half():
    h = h_series(OperatorContext(0.5, 0.0))
    assert _terms(h) == [(pytest.approx(2.0), 0.5)]
    # quadrature oracle for int_0^x s^-0.5 ds
    for x in (0.25, 1.0):
        with mp.workdps(30):
            ref = float(mp.quad(lambda s: s**-0.5, [0, x]))
        assert evaluate(h, x) == pytest.approx(ref, abs=1e-10)


def test_h_series_nonsingular_limit():
    assert _terms(h_series(OperatorContext(0.0, 0.0))) == [(1.0, 1.0)]


def test_h_at_one_equals_context_value():
    for alpha in (0.0, 0.25, 0.5, 0.75):
        ctx = OperatorContext(alpha, 0.0)
        assert evaluate(h_series(ctx), 1.0) == pytest.approx(ctx.h1, rel=1e-14)


# --- inverse images ---------------------------------------------------------------


def test_inverse_of_constant_with_singular_weight():
    # alpha=0.5, sigma=-0.5 applied to the constant -0.125
    ctx = OperatorContext(0.5, -0.5)
    g = GPSeries.constant(-0.125)
    u = apply_inverse(ctx, g)
    assert _terms(u) == [(pytest.approx(-0.5), 0.5), (pytest.approx(0.25), 1.0)]
    for x in (0.25, 1.0):
        assert evaluate(u, x) == pytest.approx(
            nested_integral(0.5, -0.5, g, x), abs=1e-8
        )


def test_inverse_of_constant_unit_weight():
    ctx = OperatorContext(0.5, 0.0)
    g = GPSeries.constant(1.0)
    u = apply_inverse(ctx, g)
    assert _terms(u) == [
        (pytest.approx(2.0), 0.5),
        (pytest.approx(-2.0 / 3.0), 1.5),
    ]
    assert evaluate(u, 0.5) == pytest.approx(nested_integral(0.5, 0.0, g, 0.5), abs=1e-8)


def test_inverse_of_zero():
    assert apply_inverse(OperatorContext(0.5, -0.5), GPSeries.zero()).is_zero


def test_inverse_at_one_values():
    assert inverse_at_one(
        OperatorContext(0.5, -0.5), GPSeries.constant(-0.125)
    ) == pytest.approx(-0.25)
    assert inverse_at_one(
        OperatorContext(0.5, -0.5), GPSeries.constant(-0.25)
    ) == pytest.approx(-0.5)
    assert inverse_at_one(OperatorContext(0.5, -0.5), GPSeries.zero()) == 0.0


# --- guards ------------------------------------------------------------------------


def test_log_resonance():
    ctx = OperatorContext(0.5, -0.5)
    with pytest.raises(LogResonance):
        apply_inverse(ctx, GPSeries.monomial(1.0, -0.5))  # weighted exponent -1


def test_outer_resonance():
    ctx = OperatorContext(0.5, 0.0)
    with pytest.raises(OuterResonance):
        apply_inverse(ctx, GPSeries.monomial(1.0, -1.5))  # weighted exponent a-2


def test_divergent():
    ctx = OperatorContext(0.5, 0.0)
    with pytest.raises(Divergent):
        apply_inverse(ctx, GPSeries.monomial(1.0, -1.7))


# --- identities -----------------------------------------------------------------------


def test_forward_inverse_identity():
    # L(L^-1(g)) = -x^sigma*g on random admissible single terms
    rng = np.random.default_rng(9)
    for alpha in (0.25, 0.5, 0.75):
        for sigma in (-0.5, 0.0, 1.5):
            ctx = OperatorContext(alpha, sigma)
            for _ in range(40):
                r = float(rng.uniform(alpha - 2 + 0.05, 6.0))
                if abs(r + 1.0) < 0.05:
                    continue
                c = float(rng.uniform(-2, 2)) or 1.0
                u = apply_inverse(ctx, GPSeries.monomial(c, r - sigma))
                image = apply_forward(alpha, u)
                assert len(image) == 1
                t = image.terms[0]
                assert t.exponent == pytest.approx(r, abs=1e-9)
                assert t.coeff == pytest.approx(-c, rel=1e-12)


def test_inverse_linearity():
    rng = np.random.default_rng(10)
    ctx = OperatorContext(0.5, -0.5)
    for _ in range(25):
        g1 = GPSeries.monomial(rng.uniform(-2, 2), rng.uniform(0.0, 4.0))
        g2 = GPSeries.monomial(rng.uniform(-2, 2), rng.uniform(0.0, 4.0))
        a, b = rng.uniform(-3, 3, size=2)
        lhs = apply_inverse(ctx, add(scale(g1, a), scale(g2, b)))
        rhs = add(scale(apply_inverse(ctx, g1), a), scale(apply_inverse(ctx, g2), b))
        assert len(lhs) == len(rhs)
        for tl, tr in zip(lhs.terms, rhs.terms):
            assert tl.exponent == pytest.approx(tr.exponent, abs=1e-12)
            assert tl.coeff == pytest.approx(tr.coeff, rel=1e-12)


def test_output_exponents_strictly_positive():
    rng = np.random.default_rng(11)
    for alpha in (0.0, 0.3, 0.75):
        ctx = OperatorContext(alpha, 0.25)
        for _ in range(25):
            g = normalize(
                [Term(rng.uniform(-1, 1), rng.uniform(0.0, 3.0)) for _ in range(3)]
            )
            u = apply_inverse(ctx, g)
            assert all(t.exponent >= 1.0 - alpha - 1e-12 for t in u.terms)
            assert evaluate(u, 0.0) == 0.0
