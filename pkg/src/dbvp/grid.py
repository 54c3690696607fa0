"""Unit-step discrete time scale and forward differences.

The full domain for a grid parameter ``T`` is the integer interval
``[0, T+2]`` and the interior is ``[1, T+1]``.  Grid functions remember
the index of their first point, so that ``delta(u)`` and
``delta_delta(u)`` live on their natural, shrinking domains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class TimeScale:
    """The discrete interval ``[0, T+2]`` for a positive integer ``T``."""

    T: int

    def __post_init__(self):
        if isinstance(self.T, bool) or not isinstance(self.T, (int, np.integer)):
            raise TypeError(f"T must be an integer, got {type(self.T).__name__}")
        if self.T < 1:
            raise ValueError(f"T must be >= 1, got {self.T}")
        object.__setattr__(self, "T", int(self.T))

    @property
    def n_points(self) -> int:
        return self.T + 3

    @property
    def domain(self) -> range:
        return range(0, self.T + 3)

    @property
    def interior(self) -> range:
        return range(1, self.T + 2)

    def points(self) -> np.ndarray:
        return np.arange(self.T + 3, dtype=float)

    def tabulate(self, f: Callable[[np.ndarray], np.ndarray]) -> "GridFunction":
        """Sample ``f(t)`` on the full domain; ``f`` receives a float array."""
        t = self.points()
        vals = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)
        return GridFunction(vals, start=0)

    def constant(self, value: float) -> "GridFunction":
        return GridFunction(np.full(self.T + 3, float(value)), start=0)


class GridFunction:
    """Real values on consecutive integers ``[start, start + len - 1]``.

    Instances are immutable: the backing array is copied and marked
    read-only.  Indexing with an integer ``i`` returns ``u(i)`` in
    *grid* coordinates, not array position, and raises
    :class:`DomainError` outside the domain.
    """

    __slots__ = ("_start", "_values")

    def __init__(self, values, start: int = 0):
        arr = np.array(values, dtype=float, copy=True)
        if arr.ndim != 1:
            raise DomainError(f"grid function values must be 1-D, got shape {arr.shape}")
        arr.setflags(write=False)
        self._values = arr
        self._start = int(start)

    @property
    def start(self) -> int:
        return self._start

    @property
    def stop(self) -> int:
        """Last index of the domain (inclusive)."""
        return self._start + len(self._values) - 1

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self._start, self._start + len(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __call__(self, i):
        return self[i]

    def __getitem__(self, i):
        if isinstance(i, slice):
            raise TypeError("use restrict() for sub-domains")
        idx = np.asarray(i)
        if not np.issubdtype(idx.dtype, np.integer):
            raise TypeError(f"grid indices must be integers, got {idx.dtype}")
        if idx.size and (idx.min() < self._start or idx.max() > self.stop):
            raise DomainError(
                f"index out of domain [{self._start}, {self.stop}]: {i!r}"
            )
        out = self._values[idx - self._start]
        return float(out) if out.ndim == 0 else out

    def restrict(self, lo: int, hi: int) -> "GridFunction":
        """The sub-function on ``[lo, hi]`` (inclusive)."""
        if lo < self._start or hi > self.stop or lo > hi:
            raise DomainError(f"[{lo}, {hi}] is not inside [{self._start}, {self.stop}]")
        return GridFunction(self._values[lo - self._start : hi - self._start + 1], start=lo)

    def same_domain(self, other: "GridFunction") -> bool:
        return self._start == other._start and len(self) == len(other)

    def _check(self, other: "GridFunction"):
        if not self.same_domain(other):
            raise DomainError(
                f"domain mismatch: [{self._start}, {self.stop}] vs [{other.start}, {other.stop}]"
            )

    def _binary(self, other, op):
        if isinstance(other, GridFunction):
            self._check(other)
            return GridFunction(op(self._values, other._values), self._start)
        return GridFunction(op(self._values, float(other)), self._start)

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return GridFunction(float(other) - self._values, self._start)

    def __mul__(self, other):
        if isinstance(other, GridFunction):
            return NotImplemented
        return GridFunction(self._values * float(other), self._start)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return GridFunction(self._values / float(other), self._start)

    def __neg__(self):
        return GridFunction(-self._values, self._start)

    def __eq__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        return self.same_domain(other) and bool(np.array_equal(self._values, other._values))

    def __hash__(self):
        return hash((self._start, self._values.tobytes()))

    def __repr__(self):
        return f"GridFunction(start={self._start}, values={self._values.tolist()!r})"


def delta(u: GridFunction) -> GridFunction:
    """Forward difference ``u(i+1) - u(i)`` on ``[start, stop-1]``."""
    if len(u) < 2:
        raise DomainError("delta needs at least 2 points")
    return GridFunction(np.diff(u.values), u.start)


def delta_delta(u: GridFunction) -> GridFunction:
    """Second forward difference ``u(i+2) - 2u(i+1) + u(i)`` on ``[start, stop-2]``."""
    if len(u) < 3:
        raise DomainError("delta_delta needs at least 3 points")
    return delta(delta(u))


def sup_norm(u: GridFunction) -> float:
    """``max |u(i)|`` over the whole domain."""
    if len(u) == 0:
        raise DomainError("sup_norm of an empty grid function")
    return float(np.max(np.abs(u.values)))
