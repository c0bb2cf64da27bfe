"""Mixed (Robin) right-boundary data: a1*y(1) + b1*y'(1) = g1 with b1 > 0.

Every correction beyond the first two components contributes exactly zero to
the Robin combination, so each partial sum satisfies the boundary data to
round-off, whatever the nonlinearity.  The demo verifies this on the linear
benchmark equation with data the closed-form reference does not satisfy.
"""

from adomian_bvp.expressions import parse
from adomian_bvp.series import differentiate, evaluate
from adomian_bvp.solver import Problem, partial_sum, solve

problem = Problem(
    alpha=0.5,
    sigma=-0.5,
    f=parse("1*(x*yp + 0.5*y)"),
    eta1=1.0,
    alpha1=1.5,
    beta1=0.75,  # derivative weight on the right boundary
    gamma1=2.0,
)

report = solve(problem, n=8)
print("partial sum   psi(0)-eta1     a1*psi(1)+b1*psi'(1)-g1")
for m in range(1, 9):
    psi = partial_sum(report, m)
    left_gap = evaluate(psi, 0.0) - problem.eta1
    combo = problem.alpha1 * evaluate(psi, 1.0) + problem.beta1 * evaluate(
        differentiate(psi), 1.0
    )
    print(f"  m = {m}        {left_gap:+.1e}        {combo - problem.gamma1:+.3e}")
