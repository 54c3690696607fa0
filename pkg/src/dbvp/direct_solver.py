"""Independent solvers used to cross-check the Picard iteration.

All of them work on the square system in the unknowns ``u(0..T+1)`` with
``u(T+2)`` pinned to ``c g(T+2)``:

    F_0 = u(1) - u(0)
    F_t = u(t+1) - 2 u(t) + u(t-1) + N_t(u),   t = 1..T+1

where ``N_t`` is the problem's row nonlinearity.  ``N_t`` depends only on
``u(t)`` and ``u(t-1)``, so the Jacobian is tridiagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg, optimize

from .errors import BoundViolation, EvaluationError
from .fixedpoint import SolveReport, ball_radius, fixed_point_gap
from .grid import GridFunction
from .problem import require_full_domain
from .truncation import AuxiliaryProblem

DEFAULT_CELL_BUDGET = 10**8


@dataclass(frozen=True)
class NewtonConfig:
    tol: float = 1e-10
    max_iter: int = 100
    fd_step: float = 1e-7
    line_search: float = 0.5
    max_backtracks: int = 30

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be > 0")
        if not 0 < self.line_search < 1:
            raise ValueError("line_search factor must lie in (0, 1)")
        if self.max_backtracks < 0:
            raise ValueError("max_backtracks must be >= 0")


def _full(p, w: np.ndarray) -> np.ndarray:
    pin = np.full(w.shape[:-1] + (1,), p.boundary_value)
    return np.concatenate([w, pin], axis=-1)


def system(p, u: np.ndarray) -> np.ndarray:
    """``F`` for full grid vectors ``u`` (last axis of length ``T+3``)."""
    u = np.asarray(u, dtype=float)
    F = np.empty(u.shape[:-1] + (p.T + 2,))
    F[..., 0] = u[..., 1] - u[..., 0]
    F[..., 1:] = u[..., 2:] - 2.0 * u[..., 1:-1] + u[..., :-2] + p.nonlinearity(u)
    return F


def _jacobian_banded(p, w: np.ndarray, fd_step: float) -> np.ndarray:
    n = w.size  # T + 2
    ab = np.zeros((3, n))
    # exact stencil; ab[1 + i - j, j] holds J[i, j]
    ab[1, 0] = -1.0
    ab[0, 1] = 1.0
    ab[1, 1:] = -2.0
    ab[2, :-1] = 1.0
    ab[0, 2:] = 1.0
    N0 = p.nonlinearity(_full(p, w))
    steps = fd_step * np.maximum(1.0, np.abs(w))
    for color in (0, 1):
        cols = np.arange(color, n, 2)
        wp = w.copy()
        wp[cols] += steps[cols]
        dN = (p.nonlinearity(_full(p, wp)) - N0)  # row t-1 holds N_t
        for t in range(1, n):
            j = t if t % 2 == color else t - 1
            ab[1 + t - j, j] += dN[t - 1] / steps[j]
    return ab


def _sup(F) -> float:
    return float(np.max(np.abs(F)))


def _report(p, u_full, converged, k, Fnorm, method, message=""):
    u = GridFunction(u_full)
    gap = fixed_point_gap(u, p) if isinstance(p, AuxiliaryProblem) else None
    return SolveReport(u, converged, k, gap, Fnorm, method, message)


def newton_solve(p, u0: GridFunction, cfg: NewtonConfig = NewtonConfig()) -> SolveReport:
    """Damped Newton with backtracking on ``||F||_sup``.

    ``p`` is a :class:`~dbvp.problem.Problem` or an
    :class:`~dbvp.truncation.AuxiliaryProblem`.  The stencil part of the
    Jacobian is exact; only the nonlinearity is differenced.  A singular
    Jacobian or a failed line search ends the run with ``converged=False``.
    Bound violations of an auxiliary problem propagate.
    """
    require_full_domain(p.T, u0, "u0")
    w = u0.values[:-1].copy()
    F = system(p, _full(p, w))
    Fn = _sup(F)
    k = 0
    while Fn > cfg.tol:
        if k >= cfg.max_iter:
            return _report(p, _full(p, w), False, k, Fn, "newton",
                           f"no convergence within {cfg.max_iter} iterations")
        ab = _jacobian_banded(p, w, cfg.fd_step)
        try:
            with np.errstate(all="raise"):
                d = linalg.solve_banded((1, 1), ab, -F)
        except (linalg.LinAlgError, FloatingPointError, ValueError):
            return _report(p, _full(p, w), False, k, Fn, "newton", "singular Jacobian")
        if not np.all(np.isfinite(d)):
            return _report(p, _full(p, w), False, k, Fn, "newton", "singular Jacobian")
        lam = 1.0
        for _ in range(cfg.max_backtracks + 1):
            wt = w + lam * d
            try:
                Ft = system(p, _full(p, wt))
                Ftn = _sup(Ft)
            except EvaluationError:
                Ftn = np.inf
            if Ftn <= (1.0 - 1e-4 * lam) * Fn:
                break
            lam *= cfg.line_search
        else:
            return _report(p, _full(p, w), False, k, Fn, "newton", "line search failed")
        w, F, Fn = wt, Ft, Ftn
        k += 1
    return _report(p, _full(p, w), True, k, Fn, "newton")


def _shoot(p, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    u = np.empty(a.shape + (p.T + 3,))
    u[..., 0] = a
    u[..., 1] = a
    for t in range(1, p.T + 2):
        u[..., t + 1] = 2.0 * u[..., t] - u[..., t - 1] - p.term(t, u[..., t], u[..., t - 1])
    return u


def shooting_solve(p, a_range=None, tol: float = 1e-13, scan: int = 257) -> SolveReport:
    """Solve by shooting from the Neumann end.

    With ``u(0) = u(1) = a`` the difference equation is an explicit
    recursion, leaving the scalar equation ``u_a(T+2) = c g(T+2)``.  For an
    auxiliary problem ``|u_a(T+2) - a|`` is at most the ball radius, so the
    default search interval is guaranteed to contain a sign change.  For a
    plain problem ``a_range`` should be supplied.
    """
    cg = p.boundary_value
    if a_range is None:
        if not isinstance(p, AuxiliaryProblem):
            raise ValueError("a_range is required unless p is an AuxiliaryProblem")
        r = ball_radius(p.M, p.T) + 1.0
        a_range = (cg - r, cg + r)
    lo, hi = map(float, a_range)
    if not lo < hi:
        raise ValueError("a_range must be an increasing pair")

    def miss(a):
        return float(_shoot(p, a)[-1] - cg)

    grid = np.linspace(lo, hi, scan)
    vals = _shoot(p, grid)[:, -1] - cg
    exact = np.flatnonzero(vals == 0)
    if exact.size:
        a = grid[exact[0]]
    else:
        change = np.flatnonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))
        if not change.size:
            u = _shoot(p, grid[np.argmin(np.abs(vals))])
            u[-1] = cg
            return _report(p, u, False, scan, _sup(system(p, u)), "shooting",
                           "no sign change in the shooting interval")
        j = change[0]
        a = optimize.brentq(miss, grid[j], grid[j + 1], xtol=tol * max(1.0, abs(grid[j])),
                            rtol=4 * np.finfo(float).eps, maxiter=500)
    u = _shoot(p, a)
    u[-1] = cg
    Fn = _sup(system(p, u))
    return _report(p, u, True, scan, Fn, "shooting")


def brute_force_solve(p, bounds, step: float, budget: int = DEFAULT_CELL_BUDGET,
                      chunk: int = 1 << 18) -> SolveReport:
    """Exhaustive lattice search minimizing ``||F||_sup``; tiny problems only.

    ``bounds`` is one ``(lo, hi)`` pair applied to every unknown
    ``u(0..T+1)`` or a sequence of ``T+2`` pairs.  The lattice is
    ``lo + k * step`` up to ``hi``.  ``iterations`` in the report is the
    number of cells scanned.
    """
    if p.T > 2:
        raise ValueError("brute force is limited to T <= 2")
    if not step > 0:
        raise ValueError("step must be > 0")
    n = p.T + 2
    b = np.asarray(bounds, dtype=float)
    if b.shape == (2,):
        b = np.tile(b, (n, 1))
    if b.shape != (n, 2) or np.any(b[:, 1] < b[:, 0]):
        raise ValueError(f"bounds must be (lo, hi) or {n} such pairs with lo <= hi")
    counts = np.floor((b[:, 1] - b[:, 0]) / step + 1e-9).astype(np.int64) + 1
    cells = int(np.prod(counts.astype(object)))
    if cells > budget:
        raise ValueError(f"lattice has {cells} cells, over the budget of {budget}")

    best_val, best_u = np.inf, None
    for lo_flat in range(0, cells, chunk):
        flat = np.arange(lo_flat, min(cells, lo_flat + chunk))
        idx = np.stack(np.unravel_index(flat, tuple(counts)), axis=-1)
        W = b[:, 0] + idx * step
        try:
            vals = np.max(np.abs(system(p, _full(p, W))), axis=-1)
        except (EvaluationError, BoundViolation):
            # fall back to row-wise evaluation so one bad cell does not void the chunk
            vals = np.full(len(W), np.inf)
            for r, wr in enumerate(W):
                try:
                    vals[r] = _sup(system(p, _full(p, wr)))
                except (EvaluationError, BoundViolation):
                    pass
        k = int(np.argmin(vals))
        if vals[k] < best_val:
            best_val, best_u = float(vals[k]), _full(p, W[k])
    if best_u is None:
        raise EvaluationError("the nonlinearity could not be evaluated anywhere on the lattice")
    return _report(p, best_u, True, cells, best_val, "brute")
