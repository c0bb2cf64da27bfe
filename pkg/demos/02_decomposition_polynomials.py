"""Decomposition polynomials of a nonlinearity, generated by ring composition.

Writing the solution as y_0 + y_1*lam + y_2*lam^2 + ... and pushing
f(x, y, y') through a truncated polynomial ring makes the n-th decomposition
polynomial A_n appear as the coefficient of lam^n; no symbolic
differentiation in lam is ever needed.  The demo checks the classical
sanity property A_0 = f(x, y_0, y_0') and then shows the series forms of
A_1, A_2 for an exponential nonlinearity.
"""

import math

from adomian_bvp.expressions import eval_lambda, eval_real, parse
from adomian_bvp.lambda_ring import extract_adomian, lift_solution
from adomian_bvp.series import GPSeries, evaluate, format_series, normalize, Term

# f(x, y, y') = -e^y (x y' + 1/2), expanded around the constant y_0 = -ln 4.
f = parse("-1*exp(y)*(x*yp + 0.5)")
components = [
    GPSeries.constant(-math.log(4.0)),
    normalize([Term(0.0268564, 0.5), Term(-0.25, 1.0)]),   # a typical y_1
    normalize([Term(-0.0267739, 0.5), Term(0.03125, 2.0)]),
]

order = 2
y_lam, yp_lam = lift_solution(components, order)
composed = eval_lambda(f, y_lam, yp_lam)

for n in range(order + 1):
    print(f"A_{n}:", format_series(extract_adomian(composed, n)))

# A_0 equals f evaluated at the zeroth component, independently of x.
a0 = extract_adomian(composed, 0)
for x in (0.3, 0.8):
    direct = eval_real(f, x, -math.log(4.0), 0.0)
    print(f"A_0({x}) = {evaluate(a0, x):+.10f}   f(x, y0, 0) = {direct:+.10f}")
