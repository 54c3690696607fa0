"""
Certifying a nonlinear problem
==============================

h(t, x, y) = exp(-x) - 0.1 y has no closed-form solution.  Given a
lower/upper pair the pipeline returns a certificate that the solution it
found lies between them.
"""

from dbvp import ProblemSpec, run_pipeline

spec = ProblemSpec.from_dict({
    "T": 6,
    "h": "exp(-x) - 0.1*y",
    "g_T2": 0.5,
    "alpha": "0",
    "beta": "80 - t^2",
})

cert = run_pipeline(spec)
print("status:", cert.status)
print(f"M = {cert.M:.4g}, ball radius = {cert.ball_radius:.4g}")
for a in cert.attempts:
    print("  attempt:", a)
print("u =", cert.solve.u.values.round(6))
print(f"min(u - alpha) = {cert.enclosure.min_lower_slack:.4g}, "
      f"min(beta - u) = {cert.enclosure.min_upper_slack:.4g}")
print("original residual:", cert.original_residual)
print("h_tilde = h along u:", cert.agreement, " positive:", cert.positive)
print("Newton on the original problem lands", cert.crosscheck["distance"], "away")

# A beta that is too small is not an upper solution, and nothing is solved.
bad = run_pipeline(dict(spec.to_dict(), beta="1"))
print()
print("with beta = 1:", bad.status)
print("reason:", bad.reason)
print("solve report present:", bad.solve is not None)
