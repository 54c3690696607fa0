"""
Independent oracles
===================

Picard, Newton, shooting and an exhaustive lattice search should agree on
a small problem.  Here h = 1 - x/4 on T = 1 with the bracket 0 <= u <= 4.
"""

import numpy as np

from dbvp import (Bracket, NewtonConfig, Problem, SolveConfig, TimeScale, brute_force_solve,
                  make_auxiliary, newton_solve, picard_solve, shooting_solve)

ts = TimeScale(1)
p = Problem(ts, lambda t, x, y: 1 - x / 4 + 0 * y, g_T2=0.0)
b = Bracket(ts.constant(0.0), ts.constant(4.0))
ap = make_auxiliary(p, b)

picard = picard_solve(ap, SolveConfig(tol=1e-13))
newton = newton_solve(p, b.midpoint(), NewtonConfig(tol=1e-13))
shoot = shooting_solve(ap)

# coarse scan, then a fine lattice around the coarse winner
coarse = brute_force_solve(p, (0.0, 4.0), 0.25)
c = coarse.u.values[:-1]
step = 2.0 ** -6
fine = brute_force_solve(p, np.stack([c - 0.5, c + 0.5], axis=1), step)

for name, rep in [("picard", picard), ("newton", newton), ("shooting", shoot), ("brute", fine)]:
    print(f"{name:9s} u = {np.array2string(rep.u.values, precision=10)}  residual {rep.final_residual:.2e}")

print("brute vs newton, in lattice steps:",
      np.max(np.abs(fine.u.values - newton.u.values)) / step)
print("cells scanned:", coarse.iterations + fine.iterations)
