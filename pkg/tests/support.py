"""Shared fixtures for the test suite: published reference data and helpers.

The component expansions and maximum-error tables below are frozen from the
benchmark write-up this package reproduces.  Coefficients are compared at
half an ulp of their shortest printed form (4 to 6 significant digits), so
each assertion pins at least the printed precision.
"""

from __future__ import annotations

import math
import re

from adomian_bvp.series import GPSeries

# --- tolerance from printed significant digits --------------------------------


def _sig_digits(printed: str) -> int:
    mantissa = printed.lower().split("e")[0]
    digits = re.sub(r"[^0-9]", "", mantissa).lstrip("0")
    return max(len(digits), 1)


def printed_rel_tol(printed: str) -> float:
    """Relative half-ulp bound of a decimal literal at its printed precision."""
    return 0.6 * 10.0 ** (1 - _sig_digits(printed))


def assert_series_matches_printed(
    series: GPSeries, printed: list[tuple[str, float]]
) -> None:
    """Coefficient-by-coefficient comparison against printed (value, exponent) pairs."""
    assert len(series.terms) == len(printed), (
        f"term count {len(series.terms)} != printed {len(printed)}: "
        f"{[(t.coeff, t.exponent) for t in series.terms]}"
    )
    for term, (coeff_str, exponent) in zip(series.terms, printed):
        assert abs(term.exponent - exponent) < 1e-9, (term, coeff_str, exponent)
        ref = float(coeff_str)
        rel = abs(term.coeff - ref) / abs(ref)
        assert rel <= printed_rel_tol(coeff_str), (
            f"coefficient of x^{exponent}: got {term.coeff!r}, printed {coeff_str} "
            f"(rel dev {rel:.2e} > {printed_rel_tol(coeff_str):.2e})"
        )


# --- printed component expansions ----------------------------------------------
# keys: (example, alpha, beta) -> {k: [(coeff string, exponent), ...]}

PRINTED_COMPONENTS = {
    (1, 0.5, 1.0): {
        1: [("0.0268564", 0.5), ("-0.25", 1.0)],
        2: [("-0.0267739", 0.5), ("-0.00447607", 1.5), ("0.03125", 2.0)],
        3: [
            ("-0.0003279", 0.5),
            ("0.0044623", 1.5),
            ("-0.000045079", 2.0),
            ("0.00111902", 2.5),
            ("-0.0052083", 3.0),
        ],
        4: [
            ("0.00025327", 0.5),
            ("0.0000546545", 1.5),
            ("0.0000898816", 2.0),
            ("-0.0011159", 2.5),
            ("0.0000212874", 3.0),
            ("-0.0002797", 3.5),
            ("0.000976563", 4.0),
        ],
    },
    (1, 0.5, 3.5): {
        1: [("0.0268564", 0.5), ("-0.25", 3.5)],
        2: [("-0.0253752", 0.5), ("-0.00587485", 4.0), ("0.03125", 7.0)],
        3: [
            ("-0.00174107", 0.5),
            ("0.00555081", 4.0),
            ("-0.000070123", 4.5),
            ("0.00146871", 7.5),
            ("-0.00520833", 10.5),
        ],
        4: [
            ("0.000230726", 0.5),
            ("0.000380859", 4.0),
            ("0.000132511", 4.5),
            ("-5.6497931825e-7", 5.0),
            ("-0.0013877", 7.5),
            ("0.0000347878", 8.0),
            ("-0.000367178", 11.0),
            ("0.000976563", 14.0),
        ],
    },
    (2, 0.5, 1.0): {
        1: [("0.0945349", 0.5), ("-0.5", 1.0)],
        2: [("-0.0934884", 0.5), ("-0.0315116", 1.5), ("0.125", 2.0)],
        3: [
            ("-0.00413483", 0.5),
            ("0.0311628", 1.5),
            ("-0.00111711", 2.0),
            ("0.0157558", 2.5),
            ("-0.0416667", 3.0),
        ],
        4: [
            ("0.00321966", 0.5),
            ("0.00137828", 1.5),
            ("0.00220948", 2.0),
            ("-0.0156096", 2.5),
            ("0.00105504", 3.0),
            ("-0.00787791", 3.5),
            ("0.015625", 4.0),
        ],
    },
    (3, 0.5, 1.0): {
        1: [("0.718282", 0.5), ("1", 1.0)],
        2: [("-0.978855", 0.5), ("0.478855", 1.5), ("0.5", 2.0)],
        3: [
            ("0.294361", 0.5),
            ("-0.65257", 1.5),
            ("0.191542", 2.5),
            ("0.166667", 3.0),
        ],
        4: [
            ("-0.0316058", 0.5),
            ("0.196241", 1.5),
            ("-0.261028", 2.5),
            ("0.0547262", 3.5),
            ("0.0416667", 4.0),
        ],
    },
    (3, 0.5, 2.5): {
        1: [("0.718282", 0.5), ("1", 2.5)],
        2: [("-1.09857", 0.5), ("0.598568", 3.0), ("0.5", 5.0)],
        3: [
            ("0.47673", 0.5),
            ("-0.915473", 3.0),
            ("0.272076", 5.5),
            ("0.166667", 7.5),
        ],
        4: [
            ("-0.107842", 0.5),
            ("0.397275", 3.0),
            ("-0.416124", 5.5),
            ("0.0850239", 8.0),
            ("0.0416667", 10.0),
        ],
    },
}

FIRST_COMPONENT = {  # exact eta1 per (example, beta-independent)
    1: -math.log(4.0),
    2: -math.log(2.0),
    3: 1.0,
}

# --- published maximum-error tables ---------------------------------------------
# keys: (example, beta) -> {alpha: (E5, E8, E10)}

PUBLISHED_TABLES = {
    (1, 1.0): {
        0.25: (1.11205e-5, 2.30301e-8, 3.54171e-10),
        0.5: (1.52386e-5, 2.68725e-8, 6.11240e-10),
        0.75: (1.62907e-5, 4.91114e-8, 9.22449e-10),
    },
    (1, 3.5): {
        0.25: (1.50942e-5, 5.61969e-8, 1.12729e-9),
        0.5: (1.58204e-5, 6.53078e-8, 1.32773e-9),
        0.75: (2.91795e-5, 6.92627e-8, 1.38617e-9),
    },
    (2, 1.0): {
        0.25: (8.25847e-5, 8.22973e-7, 3.94246e-8),
        0.5: (8.41014e-5, 1.68118e-6, 4.29665e-8),
        0.75: (3.17953e-5, 8.27238e-6, 6.58700e-8),
    },
    (3, 1.0): {
        0.25: (9.47534e-5, 9.45679e-7, 2.28700e-9),
        0.5: (6.54946e-5, 6.83854e-7, 1.04295e-8),
        0.75: (8.17721e-5, 1.08101e-6, 1.18947e-8),
    },
    (3, 2.5): {
        0.25: (8.48845e-4, 5.11258e-6, 3.01254e-8),
        0.5: (9.99777e-4, 5.94699e-6, 3.44033e-8),
        0.75: (2.97716e-4, 1.53819e-6, 1.19534e-8),
    },
}

TABLE_NS = (5, 8, 10)
TABLE_ALPHAS = (0.25, 0.5, 0.75)
