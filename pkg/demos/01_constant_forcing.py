"""
Constant forcing, by hand
=========================

With h = 1 on T = 2 the problem is linear and its solution has a closed
form, u(t) = sum_{s=t}^{3} s.  We go through each step on this case.
"""

import numpy as np

from dbvp import (Bracket, Problem, TimeScale, apply_T, ball_radius, check_lower,
                  check_upper, make_auxiliary, picard_solve, residual)

ts = TimeScale(2)
print("grid points:", ts.points())

# h(t, x, y) must accept numpy arrays
p = Problem(ts, lambda t, x, y: 1.0 + 0 * x, g_T2=0.0)

# alpha = 0 is a lower solution, beta = 10 - t^2/2 is an upper one
alpha = ts.constant(0.0)
beta = ts.tabulate(lambda t: 10 - t**2 / 2)
print(check_lower(p, alpha).describe())
print(check_upper(p, beta).describe())

# the truncated problem and its a-priori bound
ap = make_auxiliary(p, Bracket(alpha, beta))
print("M =", ap.M, " ball radius =", ball_radius(ap.M, ts.T))

# h_tilde does not depend on u inside the bracket, so one sweep is enough
print("T(midpoint) =", apply_T(Bracket(alpha, beta).midpoint(), ap).values)

rep = picard_solve(ap)
print(f"picard: converged={rep.converged} after {rep.iterations} iteration(s)")
print("u =", rep.u.values)

closed_form = [sum(range(max(t, 1), 4)) for t in range(5)]
print("closed form matches:", np.array_equal(rep.u.values, closed_form))
print("residual in the original problem:", residual(p, rep.u).worst)
