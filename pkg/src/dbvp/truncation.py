"""Truncation of the nonlinearity to a lower/upper bracket.

Given a bracket ``alpha <= beta`` the modified nonlinearity ``h_tilde``
evaluates ``h`` only at arguments clamped into the bracket and adds a
rational penalty ``w / (w + 1)`` (``w`` the distance outside) pushing ``x``
back toward ``[alpha(t), beta(t)]``.  The result is bounded globally,
which is what makes the summation operator map a ball into itself.

Calling convention: ``h_tilde(t, x, z)`` takes the previous grid value
``z = u(t-1)``, not a difference; the third argument handed to ``h`` is
``x - sigma(t, z)``, a truncated ``u^Δ(t-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundViolation, DomainError
from .grid import GridFunction
from .problem import Problem, require_full_domain

DEFAULT_GRID_DENSITY = 128


@dataclass(frozen=True)
class Bracket:
    """A lower/upper pair with ``alpha(t) <= beta(t)`` on all of ``[0, T+2]``."""

    alpha: GridFunction
    beta: GridFunction

    def __post_init__(self):
        if self.alpha.start != 0 or len(self.alpha) < 4:
            raise DomainError("alpha must be defined on [0, T+2] with T >= 1")
        require_full_domain(len(self.alpha) - 3, self.beta, "beta")
        gap = self.beta.values - self.alpha.values
        if np.any(np.isnan(gap)) or np.any(gap < 0):
            t = int(np.argmin(np.nan_to_num(gap, nan=-np.inf)))
            raise ValueError(f"bracket requires alpha <= beta; fails at t={t}")

    @property
    def T(self) -> int:
        return len(self.alpha) - 3

    def midpoint(self) -> GridFunction:
        return GridFunction(0.5 * (self.alpha.values + self.beta.values), start=0)

    def contains(self, u: GridFunction, tol: float = 0.0) -> bool:
        require_full_domain(self.T, u)
        return bool(np.all(u.values >= self.alpha.values - tol)
                    and np.all(u.values <= self.beta.values + tol))


def _t_index(t, T: int) -> np.ndarray:
    ti = np.asarray(t)
    if not np.issubdtype(ti.dtype, np.integer):
        tr = np.rint(ti)
        if np.any(tr != ti):
            raise DomainError("t must be an integer grid index")
        ti = tr.astype(np.int64)
    if ti.size and (ti.min() < 1 or ti.max() > T + 1):
        raise DomainError(f"t must lie in [1, {T + 1}]")
    return ti


def _scalar_or_array(out, *inputs):
    if all(np.ndim(a) == 0 for a in inputs):
        return float(out)
    return out


def sigma(t, z, b: Bracket):
    """Clamp ``z`` to ``[alpha(t-1), beta(t-1)]``."""
    ti = _t_index(t, b.T)
    lo, hi = b.alpha.values[ti - 1], b.beta.values[ti - 1]
    return _scalar_or_array(np.clip(np.asarray(z, dtype=float), lo, hi), t, z)


def penalty(w) -> np.ndarray:
    """``w / (w + 1)`` for ``w > 0``, zero otherwise; always in ``[0, 1)``."""
    w = np.asarray(w, dtype=float)
    pos = np.maximum(w, 0.0)
    return pos / (pos + 1.0)


def _h_tilde(t, x, z, p: Problem, b: Bracket) -> np.ndarray:
    ti = _t_index(t, b.T)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    a_t, b_t = b.alpha.values[ti], b.beta.values[ti]
    s = np.clip(z, b.alpha.values[ti - 1], b.beta.values[ti - 1])
    xc = np.clip(x, a_t, b_t)
    hv = p.eval_h(ti, xc, xc - s)
    above = x > b_t
    below = x < a_t
    if np.any(above) or np.any(below):
        hv = np.where(above, hv - penalty(x - b_t), hv)
        hv = np.where(below, hv + penalty(a_t - x), hv)
    return hv


def h_tilde(t, x, z, p: Problem, b: Bracket):
    """The truncated nonlinearity at ``(t, x)`` with previous value ``z``.

    Inside the bracket box (``alpha(t) <= x <= beta(t)`` and
    ``alpha(t-1) <= z <= beta(t-1)``) this is ``h(t, x, x - z)`` with
    bit-identical arguments.
    """
    return _scalar_or_array(_h_tilde(t, x, z, p, b), t, x, z)


def estimate_M(p: Problem, b: Bracket, grid_density: int = DEFAULT_GRID_DENSITY) -> float:
    """Lattice maximum of ``|h(t, x, x - z)|`` over the bracket box, plus 1.

    Outside the box ``h_tilde`` evaluates ``h`` at clamped arguments, which
    lie in the box, and adds a penalty below 1.  The lattice can miss an
    interior spike of a general ``h``; :class:`AuxiliaryProblem` re-checks
    the bound on every evaluation.
    """
    if grid_density < 2:
        raise ValueError("grid_density must be >= 2")
    if b.T != p.T:
        raise DomainError(f"bracket has T={b.T}, problem has T={p.T}")
    s = np.linspace(0.0, 1.0, grid_density)
    t = np.arange(1, p.T + 2)
    a, be = b.alpha.values, b.beta.values
    x = a[t, None] + s[None, :] * (be[t] - a[t])[:, None]
    z = a[t - 1, None] + s[None, :] * (be[t - 1] - a[t - 1])[:, None]
    # a collapsed bracket row gives repeated lattice points; harmless
    X = x[:, :, None]
    Z = z[:, None, :]
    H = p.eval_h(t[:, None, None], X, X - Z)
    return float(np.max(np.abs(H))) + 1.0


@dataclass(frozen=True)
class AuxiliaryProblem:
    """The truncated problem: same boundary data, nonlinearity ``h_tilde``.

    Exposes the same ``T``/``boundary_value``/``nonlinearity`` surface as
    :class:`Problem`, so residuals and solvers accept either.
    """

    base: Problem
    bracket: Bracket
    M: float

    def __post_init__(self):
        if self.bracket.T != self.base.T:
            raise DomainError(f"bracket has T={self.bracket.T}, problem has T={self.base.T}")
        if not self.M > 0:
            raise ValueError("M must be > 0")

    @property
    def ts(self):
        return self.base.ts

    @property
    def T(self) -> int:
        return self.base.T

    @property
    def g_T2(self) -> float:
        return self.base.g_T2

    @property
    def c(self) -> float:
        return self.base.c

    @property
    def boundary_value(self) -> float:
        return self.base.boundary_value

    def h_tilde(self, t, x, z):
        out = _h_tilde(t, x, z, self.base, self.bracket)
        over = np.abs(out) > self.M
        if np.any(over):
            k = np.flatnonzero(over.ravel())[0]
            raise BoundViolation(
                f"|h_tilde| = {np.abs(out).ravel()[k]:.17g} exceeds M = {self.M:.17g}"
            )
        return _scalar_or_array(out, t, x, z)

    def term(self, t, x, z) -> np.ndarray:
        return np.asarray(self.h_tilde(t, x, z))

    def nonlinearity(self, u: np.ndarray) -> np.ndarray:
        """``h_tilde(i, u(i), u(i-1))`` for ``i = 1..T+1`` along the last axis."""
        u = np.asarray(u, dtype=float)
        t = np.arange(1, self.T + 2)
        return self.term(t, u[..., 1 : self.T + 2], u[..., 0 : self.T + 1])


def make_auxiliary(p: Problem, b: Bracket, grid_density: int = DEFAULT_GRID_DENSITY) -> AuxiliaryProblem:
    return AuxiliaryProblem(p, b, estimate_M(p, b, grid_density))
