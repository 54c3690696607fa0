"""Problem data, residuals, and lower/upper solution checks.

A :class:`Problem` is the mixed boundary value problem

    u^ΔΔ(t-1) + h(t, u(t), u^Δ(t-1)) = 0,   t in [1, T+1]
    u^Δ(0) = 0,   u(T+2) = c * g(T+2)

``h`` must be vectorized: it is called with numpy arrays ``t, x, y`` of a
common broadcast shape and must return an array (or scalar) broadcastable
to that shape.  Plain arithmetic lambdas and numpy ufuncs qualify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, EvaluationError
from .grid import GridFunction, TimeScale, delta, delta_delta, sup_norm

Nonlinearity = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]

DEFAULT_TOL = 1e-9


def call_h(h: Nonlinearity, t, x, y) -> np.ndarray:
    """Evaluate ``h`` and insist on a finite float array of the broadcast shape."""
    t, x, y = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(x, dtype=float),
                                  np.asarray(y, dtype=float))
    try:
        with np.errstate(all="ignore"):
            out = h(t, x, y)
    except EvaluationError:
        raise
    except (ArithmeticError, ValueError) as exc:
        raise EvaluationError(f"nonlinearity failed: {exc}") from exc
    out = np.broadcast_to(np.asarray(out, dtype=float), t.shape)
    if not np.all(np.isfinite(out)):
        bad = np.flatnonzero(~np.isfinite(out.ravel()))[0]
        raise EvaluationError(
            "nonlinearity returned a non-finite value at "
            f"t={t.ravel()[bad]:g}, x={x.ravel()[bad]:g}, y={y.ravel()[bad]:g}"
        )
    return out


@dataclass(frozen=True)
class Problem:
    ts: TimeScale
    h: Nonlinearity
    g_T2: float
    c: float = 1.0

    def __post_init__(self):
        if not isinstance(self.ts, TimeScale):
            object.__setattr__(self, "ts", TimeScale(self.ts))
        g, c = float(self.g_T2), float(self.c)
        if not np.isfinite(g) or g < 0:
            raise ValueError(f"g(T+2) must be a finite value >= 0, got {self.g_T2}")
        if not np.isfinite(c) or c <= 0:
            raise ValueError(f"c must be a finite value > 0, got {self.c}")
        object.__setattr__(self, "g_T2", g)
        object.__setattr__(self, "c", c)

    @property
    def T(self) -> int:
        return self.ts.T

    @property
    def boundary_value(self) -> float:
        """The Dirichlet value ``c * g(T+2)``."""
        return self.c * self.g_T2

    def eval_h(self, t, x, y) -> np.ndarray:
        return call_h(self.h, t, x, y)

    def term(self, t, x, z) -> np.ndarray:
        """The row nonlinearity at ``(t, x)`` given the previous value ``z = u(t-1)``."""
        x = np.asarray(x, dtype=float)
        return self.eval_h(t, x, x - np.asarray(z, dtype=float))

    def nonlinearity(self, u: np.ndarray) -> np.ndarray:
        """``h(i, u(i), u(i) - u(i-1))`` for ``i = 1..T+1`` along the last axis of ``u``."""
        u = np.asarray(u, dtype=float)
        t = np.arange(1, self.T + 2, dtype=float)
        return self.term(t, u[..., 1 : self.T + 2], u[..., 0 : self.T + 1])


def require_full_domain(T: int, u: GridFunction, name: str = "u"):
    if u.start != 0 or len(u) != T + 3:
        raise DomainError(
            f"{name} must be defined on [0, {T + 2}], got [{u.start}, {u.stop}]"
        )


@dataclass(frozen=True)
class ResidualReport:
    residual: GridFunction
    bc_left: float
    bc_right_gap: float
    max_abs_residual: float

    @property
    def worst(self) -> float:
        """Largest defect over the difference rows and both boundary rows."""
        return max(self.max_abs_residual, abs(self.bc_left), abs(self.bc_right_gap))


def residual(p, u: GridFunction) -> ResidualReport:
    """Defects of ``u`` in the difference equation and both boundary conditions.

    ``p`` may be a :class:`Problem` or anything with the same
    ``T``/``boundary_value``/``nonlinearity`` surface (e.g. an auxiliary
    problem), in which case its own nonlinearity is used.
    """
    require_full_domain(p.T, u)
    d2 = delta_delta(u).values  # index t-1 for t = 1..T+1
    res = GridFunction(d2 + p.nonlinearity(u.values), start=1)
    return ResidualReport(
        residual=res,
        bc_left=u[1] - u[0],
        bc_right_gap=u[p.T + 2] - p.boundary_value,
        max_abs_residual=sup_norm(res),
    )


def is_solution(p, u: GridFunction, tol: float = DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be > 0")
    return residual(p, u).worst <= tol


def is_positive_solution(u: GridFunction) -> bool:
    """``u(t) > 0`` on the interior; the endpoints are exempt."""
    if u.start != 0 or len(u) < 3:
        raise DomainError(f"expected a function on [0, T+2], got [{u.start}, {u.stop}]")
    return bool(np.all(u.values[1:-1] > 0))


@dataclass(frozen=True)
class BracketCheck:
    """Slacks of a lower/upper solution check; every slack is >= 0 when satisfied.

    For a lower solution the slacks are the left-hand sides of the three
    inequalities as written (``α^ΔΔ + h``, ``α^Δ(0)``, ``g - α(T+2)``);
    for an upper solution they are negated so the same sign convention holds.
    """

    kind: str
    ok: bool
    difference: GridFunction
    left: float
    right: float
    tol: float
    first_violation: Optional[tuple] = None  # (row label, t, slack)

    def describe(self) -> str:
        name = "lower" if self.kind == "lower" else "upper"
        if self.ok:
            return f"{name} solution inequalities hold (tol {self.tol:g})"
        row, t, amount = self.first_violation
        return f"{name} solution check failed: {row} violated at t={t} by {-amount:.6g}"


_ROWS = {
    "lower": ("alpha^DD(t-1) + h(t, alpha(t), alpha^D(t-1)) >= 0",
              "alpha^D(0) >= 0", "alpha(T+2) <= g(T+2)"),
    "upper": ("beta^DD(t-1) + h(t, beta(t), beta^D(t-1)) <= 0",
              "beta^D(0) <= 0", "beta(T+2) >= g(T+2)"),
}


def _bracket_check(kind, p: Problem, f: GridFunction, tol: float) -> BracketCheck:
    require_full_domain(p.T, f, "alpha" if kind == "lower" else "beta")
    sign = 1.0 if kind == "lower" else -1.0
    diff = sign * (delta_delta(f).values + p.nonlinearity(f.values))
    left = sign * delta(f)[0]
    right = sign * (p.g_T2 - f[p.T + 2])
    rows = _ROWS[kind]
    first = None
    if left < -tol:
        first = (rows[1], 0, left)
    else:
        bad = np.flatnonzero(diff < -tol)
        if bad.size:
            first = (rows[0], int(bad[0]) + 1, float(diff[bad[0]]))
        elif right < -tol:
            first = (rows[2], p.T + 2, right)
    return BracketCheck(kind, first is None, GridFunction(diff, start=1),
                        float(left), float(right), tol, first)


def check_lower(p: Problem, alpha: GridFunction, tol: float = DEFAULT_TOL) -> BracketCheck:
    return _bracket_check("lower", p, alpha, tol)


def check_upper(p: Problem, beta: GridFunction, tol: float = DEFAULT_TOL) -> BracketCheck:
    return _bracket_check("upper", p, beta, tol)


@dataclass(frozen=True)
class A2Verdict:
    """Outcome of the sampled monotonicity check of ``h`` in its third argument.

    Passing proves nothing beyond the sampled lattice; ``label`` is always
    ``"sampled"`` to keep that visible in reports.
    """

    ok: bool
    samples: int
    worst: Optional[dict] = None
    label: str = field(default="sampled")


def check_A2_sampled(p: Problem, box, samples: int = 16, tol: float = DEFAULT_TOL) -> A2Verdict:
    """Check ``h(t, x, y1) >= h(t, x, y2)`` for ``y1 < y2`` on a lattice.

    ``box`` is either one rectangle ``(x_lo, x_hi, y_lo, y_hi)`` used for
    every ``t`` in ``[1, T+1]``, or an array of ``T+1`` such rows.  The
    x-range may collapse to a point; the y-range may not.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    box = np.asarray(box, dtype=float)
    if box.shape == (4,):
        box = np.tile(box, (p.T + 1, 1))
    if box.shape != (p.T + 1, 4):
        raise ValueError(f"box must have shape (4,) or ({p.T + 1}, 4), got {box.shape}")
    if not np.all(np.isfinite(box)) or np.any(box[:, 0] > box[:, 1]) or np.any(box[:, 2] >= box[:, 3]):
        raise ValueError("degenerate A2 box: need x_lo <= x_hi and y_lo < y_hi")

    s = np.linspace(0.0, 1.0, samples)
    t = np.arange(1, p.T + 2, dtype=float)[:, None, None]
    x = (box[:, 0, None] + s[None, :] * (box[:, 1] - box[:, 0])[:, None])[:, :, None]
    y = (box[:, 2, None] + s[None, :] * (box[:, 3] - box[:, 2])[:, None])[:, None, :]
    H = p.eval_h(t, x, y)  # (T+1, samples_x, samples_y)

    # largest increase h(y2) - h(y1) over y1 < y2, via a running minimum
    run_min = np.minimum.accumulate(H, axis=2)
    rise = H[:, :, 1:] - run_min[:, :, :-1]
    k = np.unravel_index(np.argmax(rise), rise.shape)
    worst_rise = float(rise[k])
    if worst_rise <= tol:
        return A2Verdict(True, samples)
    ti, xi, j2 = k
    j1 = int(np.argmin(H[ti, xi, : j2 + 1]))
    worst = {
        "t": int(ti) + 1,
        "x": float(x[ti, xi, 0]),
        "y1": float(y[ti, 0, j1]),
        "y2": float(y[ti, 0, j2 + 1]),
        "increase": worst_rise,
    }
    return A2Verdict(False, samples, worst)
