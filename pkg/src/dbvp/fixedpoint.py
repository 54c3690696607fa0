"""Summation solution operator and damped Picard iteration.

For an auxiliary problem the operator is

    (T u)(t) = c g(T+2) + sum_{s=t}^{T+1} sum_{i=1}^{s} h_tilde(i, u(i), u(i-1))

on ``[0, T+2]``, with empty sums equal to zero, so ``(T u)(0) = (T u)(1)``
and ``(T u)(T+2) = c g(T+2)``.  Its fixed points are exactly the
solutions of the auxiliary problem.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .grid import GridFunction
from .problem import require_full_domain, residual
from .truncation import AuxiliaryProblem

log = logging.getLogger(__name__)

METHODS = ("picard", "newton", "brute", "shooting")


@dataclass(frozen=True)
class SolveConfig:
    tol: float = 1e-10
    max_iter: int = 10_000
    damping: float = 1.0
    initial_guess: Union[str, GridFunction] = "midpoint"
    patience: Optional[int] = 500  # stop after this many iterations without a new best gap

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if int(self.max_iter) < 1:
            raise ValueError("max_iter must be >= 1")
        if not 0 < self.damping <= 1:
            raise ValueError("damping must lie in (0, 1]")
        if isinstance(self.initial_guess, str) and self.initial_guess != "midpoint":
            raise ValueError(f"unknown initial guess {self.initial_guess!r}")
        if self.patience is not None and self.patience < 1:
            raise ValueError("patience must be >= 1 or None")


@dataclass(frozen=True)
class SolveReport:
    u: GridFunction
    converged: bool
    iterations: int
    final_gap: Optional[float]  # ||T u - u||, when u is for an auxiliary problem
    final_residual: float
    method: str
    message: str = ""
    damping: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "converged": self.converged,
            "iterations": self.iterations,
            "final_gap": self.final_gap,
            "final_residual": self.final_residual,
            "damping": self.damping,
            "message": self.message,
            "u": self.u.values.tolist(),
        }


def _apply_T_values(u: np.ndarray, ap: AuxiliaryProblem) -> np.ndarray:
    T = ap.T
    cg = ap.boundary_value
    inner = np.cumsum(ap.nonlinearity(u), axis=-1)  # S(s) for s = 1..T+1
    outer = np.cumsum(inner[..., ::-1], axis=-1)[..., ::-1]  # sum_{s=t}^{T+1} S(s), t = 1..T+1
    out = np.empty(u.shape, dtype=float)
    out[..., 1 : T + 2] = cg + outer
    out[..., 0] = out[..., 1]
    out[..., T + 2] = cg
    return out


def apply_T(u: GridFunction, ap: AuxiliaryProblem) -> GridFunction:
    """One application of the summation operator (prefix/suffix sums, O(T))."""
    require_full_domain(ap.T, u)
    return GridFunction(_apply_T_values(u.values, ap), start=0)


def fixed_point_gap(u: GridFunction, ap: AuxiliaryProblem) -> float:
    return float(np.max(np.abs(_apply_T_values(u.values, ap) - u.values)))


def ball_radius(M: float, T: int) -> float:
    """``sum_{s=1}^{T+1} s M``: the operator maps everything within this of ``c g(T+2)``."""
    if not M > 0:
        raise ValueError("M must be > 0")
    return M * (T + 1) * (T + 2) / 2


def _initial(ap: AuxiliaryProblem, guess) -> np.ndarray:
    if isinstance(guess, GridFunction):
        require_full_domain(ap.T, guess, "initial guess")
        u = guess.values.copy()
    else:
        u = ap.bracket.midpoint().values.copy()
    # start on the boundary data so damped iterates satisfy it exactly
    u[0] = u[1]
    u[-1] = ap.boundary_value
    return u


def picard_solve(ap: AuxiliaryProblem, cfg: SolveConfig = SolveConfig()) -> SolveReport:
    """Damped Picard iteration ``u <- (1 - λ) u + λ T u``.

    Converges when both the fixed-point gap and the auxiliary residual of
    the current iterate are within ``cfg.tol``.  A run also ends once
    ``cfg.patience`` iterations pass without a new smallest gap.
    Non-convergence is not an error: the report carries the iterate with
    the smallest gap seen.
    """
    lam = cfg.damping
    u = _initial(ap, cfg.initial_guess)
    Tu = _apply_T_values(u, ap)
    best_u, best_gap = u, float(np.max(np.abs(Tu - u)))
    gap = best_gap
    k = since_best = 0
    msg = f"no fixed point within {cfg.max_iter} iterations"
    while k < cfg.max_iter:
        if lam == 1.0:
            u = Tu
        else:
            u = (1.0 - lam) * u + lam * Tu
            u[-1] = ap.boundary_value
        k += 1
        if not np.all(np.isfinite(u)):
            msg = "iterate became non-finite"
            break
        Tu = _apply_T_values(u, ap)
        gap = float(np.max(np.abs(Tu - u)))
        if gap < best_gap:
            best_u, best_gap, since_best = u, gap, 0
        else:
            since_best += 1
        if gap <= cfg.tol:
            res = residual(ap, GridFunction(u)).worst
            if res <= cfg.tol:
                return SolveReport(GridFunction(u), True, k, gap, res, "picard", damping=lam)
        if cfg.patience is not None and since_best >= cfg.patience:
            msg = f"stalled: no new smallest gap in {since_best} iterations"
            break
    res = residual(ap, GridFunction(best_u)).worst
    log.debug("picard (damping %g) stopped after %d iterations, best gap %.3g", lam, k, best_gap)
    return SolveReport(GridFunction(best_u), False, k, best_gap, res, "picard",
                       message=msg, damping=lam)
