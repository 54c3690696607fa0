"""
What truncation does to h
=========================

Outside the bracket h_tilde evaluates h at clamped arguments and adds a
penalty w/(w+1) that pulls back toward the bracket.  Inside it is h itself.
"""

import numpy as np

from dbvp import Bracket, Problem, TimeScale, h_tilde, sigma

ts = TimeScale(3)
b = Bracket(ts.constant(0.0), ts.constant(1.0))
p = Problem(ts, lambda t, x, y: x + 0 * y, g_T2=0.0)

print("sigma clamps the previous value:", [sigma(1, z, b) for z in (-3.0, 0.5, 5.0)])

xs = np.array([-3.0, -1.0, -1e-6, 0.0, 0.5, 1.0, 1.0 + 1e-6, 2.0, 10.0, 1e6])
vals = h_tilde(np.full(xs.shape, 2), xs, 0.5, p, b)
for x, v in zip(xs, vals):
    print(f"x = {x:>12.9g}   h(x) = {x:>12.9g}   h_tilde = {v: .8f}")

# bounded by max|h| on the box plus one, however far out x goes
print("sup |h_tilde| over the sample:", np.abs(vals).max())
