import numpy as np
import pytest

from dbvp import Bracket, Problem, TimeScale

# (power of t, power of x, power of y) for the randomized polynomial family
MONOMIALS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0),
             (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def poly_h(coeffs):
    def h(t, x, y):
        out = 0.0
        for c, (i, j, k) in zip(coeffs, MONOMIALS):
            out = out + c * t**i * x**j * y**k
        return out
    return h


def random_poly_problem(rng, T=None, width=10.0):
    """h polynomial in (t, x, y), coefficients in [-1, 1], bracket -width <= u <= width."""
    T = int(rng.integers(1, 9)) if T is None else T
    coeffs = rng.uniform(-1.0, 1.0, len(MONOMIALS))
    ts = TimeScale(T)
    p = Problem(ts, poly_h(coeffs), float(rng.uniform(0.0, 5.0)))
    return p, Bracket(ts.constant(-width), ts.constant(width))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def constant_h(value):
    return lambda t, x, y: value + 0.0 * x


# ------------------------------------------------------- acceptance report

_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion; printed in the summary."""
    def record(label, ok, detail=""):
        _LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
