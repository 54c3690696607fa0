import numpy as np
import pytest

from dbvp import (
    Bracket, GridFunction, NewtonConfig, Problem, SolveConfig, TimeScale, brute_force_solve,
    check_lower, check_upper, make_auxiliary, newton_solve, picard_solve, shooting_solve,
)
from dbvp.direct_solver import system
from conftest import constant_h


def test_newton_affine_one_step():
    p = Problem(TimeScale(2), constant_h(1.0), 0.0)
    rep = newton_solve(p, TimeScale(2).constant(0.0))
    assert rep.converged and rep.iterations == 1 and rep.method == "newton"
    np.testing.assert_allclose(rep.u.values, [6, 6, 5, 3, 0], atol=1e-12)
    assert rep.final_gap is None


def test_newton_zero_h_one_step():
    p = Problem(TimeScale(3), constant_h(0.0), 1.0)
    rep = newton_solve(p, TimeScale(3).constant(0.0))
    assert rep.converged and rep.iterations == 1
    np.testing.assert_allclose(rep.u.values, 1.0, atol=1e-12)


def test_newton_cubic_failure_path():
    p = Problem(TimeScale(4), lambda t, x, y: x**3 + 0 * y, 0.5)
    rep = newton_solve(p, TimeScale(4).constant(1e5), NewtonConfig(max_iter=3, max_backtracks=2))
    assert not rep.converged and rep.message
    assert rep.u.start == 0 and len(rep.u) == 7


def test_newton_config_validation():
    for kw in ({"tol": 0}, {"max_iter": 0}, {"fd_step": 0}, {"line_search": 1.0}, {"max_backtracks": -1}):
        with pytest.raises(ValueError):
            NewtonConfig(**kw)


def test_system_rows():
    p = Problem(TimeScale(1), constant_h(1.0), 0.0)
    np.testing.assert_array_equal(system(p, [3, 3, 2, 0]), [0, 0, 0])
    np.testing.assert_array_equal(system(p, [0, 1, 0, 0]), [1, -1, 2])


@pytest.mark.parametrize("b0, b1", [(0.0, 0.05), (-0.2, 0.1), (1.0, 0.0)])
def test_newton_affine_in_three_iterations(rng, b0, b1):
    T = 6
    ts = TimeScale(T)
    p = Problem(ts, lambda t, x, y: 1.0 + b0 * t - b1 * x + 0 * y, 0.5)
    for _ in range(10):
        u0 = GridFunction(rng.uniform(0.0, 30.0, T + 3))
        rep = newton_solve(p, u0)
        assert rep.converged and rep.iterations <= 3


def test_brute_force_examples():
    p = Problem(TimeScale(1), constant_h(0.0), 1.0)
    rep = brute_force_solve(p, (0.0, 2.0), 0.25)
    assert rep.method == "brute" and rep.final_residual == 0
    assert rep.u.values.tolist() == [1, 1, 1, 1]

    p = Problem(TimeScale(1), constant_h(1.0), 0.0)
    rep = brute_force_solve(p, (0.0, 4.0), 0.5)
    assert rep.final_residual == 0 and rep.u.values.tolist() == [3, 3, 2, 0]


def test_brute_force_guards():
    p = Problem(TimeScale(2), constant_h(0.0), 1.0)
    with pytest.raises(ValueError, match="budget"):
        brute_force_solve(p, (0.0, 100.0), 0.01)
    with pytest.raises(ValueError):
        brute_force_solve(Problem(TimeScale(3), constant_h(0.0), 1.0), (0, 1), 0.5)
    with pytest.raises(ValueError):
        brute_force_solve(p, (0, 1), 0.0)
    with pytest.raises(ValueError):
        brute_force_solve(p, [(0, 1)] * 3, 0.5)


def test_brute_force_per_index_bounds():
    p = Problem(TimeScale(1), constant_h(1.0), 0.0)
    rep = brute_force_solve(p, [(2, 4), (2, 4), (1, 3)], 0.5)
    assert rep.u.values.tolist() == [3, 3, 2, 0] and rep.iterations == 5 * 5 * 5


def test_shooting_plain_problem_and_range_requirement():
    p = Problem(TimeScale(3), lambda t, x, y: 1 - x / 10 + 0 * y, 0.0)
    with pytest.raises(ValueError):
        shooting_solve(p)
    rep = shooting_solve(p, (-100.0, 100.0))
    assert rep.converged and rep.final_residual <= 1e-10
    ref = newton_solve(p, TimeScale(3).constant(0.0))
    np.testing.assert_allclose(rep.u.values, ref.u.values, atol=1e-9)


BRACKETED = [
    # (h, T, g, alpha, beta)
    (lambda t, x, y: 1 - x / 10 + 0 * y, 5, 0.0, lambda t: 0.0, lambda t: 10.0),
    (lambda t, x, y: np.exp(-x) - 0.1 * y, 3, 0.0, lambda t: 0.0, lambda t: 30 - t * t),
    (lambda t, x, y: 0.5 + 0.1 * np.sin(t) - 0.05 * x - 0.1 * y, 4, 1.0, lambda t: 0.0, lambda t: 12.0),
    (lambda t, x, y: 2.0 / (1 + x * x) - 0.2 * y, 2, 0.5, lambda t: 0.0, lambda t: 20 - t * t),
]


@pytest.mark.parametrize("case", range(len(BRACKETED)))
def test_oracle_agreement_on_bracketed_problems(case):
    h, T, g, a, b = BRACKETED[case]
    ts = TimeScale(T)
    p = Problem(ts, h, g)
    alpha, beta = ts.tabulate(a), ts.tabulate(b)
    assert check_lower(p, alpha).ok and check_upper(p, beta).ok
    ap = make_auxiliary(p, Bracket(alpha, beta))
    pic = picard_solve(ap, SolveConfig(tol=1e-12, max_iter=100_000, damping=0.5))
    new = newton_solve(ap, Bracket(alpha, beta).midpoint(), NewtonConfig(tol=1e-12))
    sho = shooting_solve(ap)
    assert pic.converged and new.converged and sho.converged
    assert np.max(np.abs(pic.u.values - new.u.values)) <= 1e-8
    assert np.max(np.abs(sho.u.values - new.u.values)) <= 1e-8
