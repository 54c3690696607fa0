"""Hand-evaluated expression cases shared by the module and acceptance tests."""

import math

from dbvp import EvalError, ParseError

# (source, environment, expected value or exception type)
CASES = [
    ("2+3*4", {}, 14.0),
    ("-x^2", {"x": 3}, -9.0),
    ("min(x, 1) - y^2", {"x": 3, "y": 2}, -3.0),
    ("2^3^2", {}, 512.0),
    ("(2^3)^2", {}, 64.0),
    ("8-3-2", {}, 3.0),
    ("64/4/2", {}, 8.0),
    ("(2+3)*4", {}, 20.0),
    ("2^-1", {}, 0.5),
    ("-2^2", {}, -4.0),
    ("(-2)^2", {}, 4.0),
    ("-3*-2", {}, 6.0),
    ("x - -y", {"x": 1, "y": 2}, 3.0),
    ("t", {"t": 7}, 7.0),
    ("pi", {}, math.pi),
    ("pow(2, 10) + 1.5e2 + .5", {}, 1174.5),
    ("max(t, x) * abs(y)", {"t": 1, "x": -4, "y": -3}, 3.0),
    ("sqrt(-1)", {}, EvalError),
    ("log(0)", {}, EvalError),
    ("1/(x-x)", {"x": 2}, EvalError),
    ("exp(1000)", {}, EvalError),
    ("min(1)", {}, ParseError),
    ("sin(1, 2)", {}, ParseError),
    ("2 +* 3", {}, ParseError),
    ("foo(x)", {"x": 1}, ParseError),
]
