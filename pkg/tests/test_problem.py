import numpy as np
import pytest

from dbvp import (
    DomainError, EvaluationError, GridFunction, Problem, TimeScale, check_A2_sampled,
    check_lower, check_upper, is_positive_solution, is_solution, residual,
)
from conftest import constant_h

SOL = GridFunction([6, 6, 5, 3, 0])  # h = 1, T = 2, g = 0: u(t) = sum_{s=t}^{3} s


@pytest.fixture
def p_one():
    return Problem(TimeScale(2), constant_h(1.0), 0.0)


def closed_form_constant_h(T, value):
    # u^Δ(t) = -value * t, u(T+2) = 0  =>  u(t) = value * sum_{s=t}^{T+1} s, u(0) = u(1)
    u = [value * sum(range(max(t, 1), T + 2)) for t in range(T + 3)]
    return GridFunction(u)


def test_closed_form_matches_hand_values():
    assert closed_form_constant_h(2, 1.0) == SOL
    assert closed_form_constant_h(1, 1.0) == GridFunction([3, 3, 2, 0])


def test_problem_validation():
    with pytest.raises(ValueError):
        Problem(TimeScale(2), constant_h(0.0), -1.0)
    with pytest.raises(ValueError):
        Problem(TimeScale(2), constant_h(0.0), 1.0, c=0.0)
    assert Problem(2, constant_h(0.0), 1.0).ts == TimeScale(2)


def test_residual_constant_solves_homogeneous():
    p = Problem(TimeScale(3), constant_h(0.0), 1.0)
    r = residual(p, TimeScale(3).constant(1.0))
    assert r.residual.values.tolist() == [0, 0, 0, 0]
    assert r.residual.start == 1 and r.residual.stop == 4
    assert r.bc_left == 0 and r.bc_right_gap == 0 and r.max_abs_residual == 0


def test_residual_constant_h_closed_form(p_one):
    r = residual(p_one, SOL)
    assert r.residual.values.tolist() == [0, 0, 0]
    assert r.bc_left == 0 and r.bc_right_gap == 0


def test_residual_zero_function_misses_by_h(p_one):
    r = residual(p_one, TimeScale(2).constant(0.0))
    assert r.residual.values.tolist() == [1, 1, 1]
    assert r.max_abs_residual == 1


def test_residual_domain_mismatch(p_one):
    with pytest.raises(DomainError):
        residual(p_one, GridFunction([0, 0, 0, 0]))
    with pytest.raises(DomainError):
        residual(p_one, GridFunction([0, 0, 0, 0, 0], start=1))


def test_residual_propagates_evaluation_failure():
    p = Problem(TimeScale(2), lambda t, x, y: np.log(x - 10), 0.0)
    with pytest.raises(EvaluationError):
        residual(p, SOL)


def test_is_solution(p_one):
    assert is_solution(p_one, SOL, 1e-12)
    assert not is_solution(p_one, TimeScale(2).constant(0.0), 1e-12)
    tol = 1e-9
    bumped = GridFunction(SOL.values + np.array([0, 0, 10 * tol, 0, 0]))
    assert not is_solution(p_one, bumped, tol)
    with pytest.raises(ValueError):
        is_solution(p_one, SOL, 0.0)


def test_residual_depends_on_c_only_through_right_gap():
    u = GridFunction([2.0, 2.5, 1.0, -1.0, 0.5])
    h = lambda t, x, y: np.sin(x) - y
    a = residual(Problem(TimeScale(2), h, 1.0, c=1.0), u)
    b = residual(Problem(TimeScale(2), h, 1.0, c=3.0), u)
    assert a.residual == b.residual and a.bc_left == b.bc_left
    assert a.bc_right_gap - b.bc_right_gap == pytest.approx(2.0)


@pytest.mark.parametrize("u, expected", [
    ([6, 6, 5, 3, 0], True),
    ([0, 0, 0, 0, 0], False),
    ([1, 1, 1, 1, 1], True),
    ([-1, 1, 1, 1, -1], True),
    ([1, 1, 0, 1, 1], False),
])
def test_is_positive_solution(u, expected):
    assert is_positive_solution(GridFunction(u)) is expected


def test_check_lower_examples():
    ts = TimeScale(2)
    c = check_lower(Problem(ts, constant_h(1.0), 0.0), ts.constant(0.0))
    assert c.ok and c.difference.values.tolist() == [1, 1, 1] and c.left == 0 and c.right == 0

    c = check_lower(Problem(ts, constant_h(0.0), 0.0), ts.constant(1.0))
    assert not c.ok
    assert c.first_violation[0] == "alpha(T+2) <= g(T+2)" and c.first_violation[1] == 4
    assert "alpha(T+2) <= g(T+2)" in c.describe()

    c = check_lower(Problem(ts, constant_h(0.0), 0.0), ts.tabulate(lambda t: -t))
    assert not c.ok and c.first_violation[:2] == ("alpha^D(0) >= 0", 0)
    assert c.left == -1


def test_check_upper_examples():
    ts = TimeScale(2)
    beta = ts.tabulate(lambda t: 10 - t**2 / 2)
    assert beta.values.tolist() == [10, 9.5, 8, 5.5, 2]
    c = check_upper(Problem(ts, constant_h(1.0), 0.0), beta)
    assert c.ok
    assert c.difference.values.tolist() == [0, 0, 0]
    assert c.left == 0.5 and c.right == 2  # sign-flipped: -beta^Δ(0), beta(4) - g

    assert check_upper(Problem(ts, constant_h(0.0), 0.0), ts.constant(1.0)).ok

    c = check_upper(Problem(ts, constant_h(1.0), 0.0), ts.constant(0.0))
    assert not c.ok and c.difference.values.tolist() == [-1, -1, -1]
    assert c.first_violation[1] == 1


def test_exact_solution_is_lower_and_upper(p_one):
    assert check_lower(p_one, SOL, 0.0).ok and check_upper(p_one, SOL, 0.0).ok
    off = GridFunction(SOL.values + np.array([0, 0, 0.1, 0, 0]))
    assert not (check_lower(p_one, off, 0.0).ok and check_upper(p_one, off, 0.0).ok)


def test_A2_sampled_examples():
    ts = TimeScale(3)
    box = (-1.0, 1.0, -2.0, 2.0)
    v = check_A2_sampled(Problem(ts, lambda t, x, y: -y, 0.0), box, 8)
    assert v.ok and v.label == "sampled"
    v = check_A2_sampled(Problem(ts, lambda t, x, y: y, 0.0), box, 8)
    assert not v.ok
    assert v.worst["increase"] == pytest.approx(v.worst["y2"] - v.worst["y1"])
    assert v.worst["increase"] == pytest.approx(4.0)
    v = check_A2_sampled(Problem(ts, lambda t, x, y: x**2 + 0 * y, 0.0), box, 8)
    assert v.ok


def test_A2_box_validation():
    p = Problem(TimeScale(2), lambda t, x, y: -y, 0.0)
    with pytest.raises(ValueError):
        check_A2_sampled(p, (0, 1, 1, 1), 4)
    with pytest.raises(ValueError):
        check_A2_sampled(p, (0, 1, 0, 1), 1)
    assert check_A2_sampled(p, np.tile([0.0, 0.0, -1.0, 1.0], (3, 1)), 4).ok
