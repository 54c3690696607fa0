import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dbvp import EvalError, ParseError, SpecError, evaluate, free_vars, parse
from dbvp.exprlang import FUNCTIONS, MAX_DEPTH, BinOp, Call, Const, Neg, Num, Var, compile_expr, to_source
from expr_cases import CASES


@pytest.mark.parametrize("src, env, expected", CASES, ids=[c[0] for c in CASES])
def test_fixed_cases(src, env, expected):
    if isinstance(expected, type):
        with pytest.raises(expected):
            evaluate(parse(src), env)
    else:
        assert evaluate(parse(src), env) == expected


def test_precedence_trees():
    assert parse("-x^2") == Neg(BinOp("^", Var("x"), Num(2.0)))
    assert parse("2^3^2") == BinOp("^", Num(2.0), BinOp("^", Num(3.0), Num(2.0)))
    assert parse("1-2-3") == BinOp("-", BinOp("-", Num(1.0), Num(2.0)), Num(3.0))
    assert parse(" 1 +\t2 ") == parse("1+2")
    assert parse("+x") == Var("x")


@pytest.mark.parametrize("src, names", [("2+2", set()), ("x - y + x", {"x", "y"}), ("sin(t)*x", {"t", "x"})])
def test_free_vars(src, names):
    assert free_vars(parse(src)) == names


@pytest.mark.parametrize("src, offset", [
    ("2 +* 3", 3), ("", 0), ("(1+2", 4), ("1 2", 2), ("sin x", 4), ("z", 0), ("tÉ", 1), ("1 $ 2", 2),
    ("1+é", 2), ("(é", 1), ("\u00a0$", 2),  # offsets count UTF-8 bytes
])
def test_parse_error_offsets(src, offset):
    with pytest.raises(ParseError) as exc:
        parse(src)
    err = exc.value
    assert err.offset == offset
    assert 0 <= err.offset <= len(src.encode("utf-8"))
    assert err.expected and err.found


def test_parse_error_is_spec_error():
    assert issubclass(ParseError, SpecError)
    with pytest.raises(TypeError):
        parse(3)


def test_nesting_limit():
    assert evaluate(parse("(" * 150 + "1" + ")" * 150)) == 1.0
    for src in ("(" * 10_000 + "1" + ")" * 10_000, "-" * 10_000 + "1", "2^" * 10_000 + "2"):
        with pytest.raises(ParseError, match=str(MAX_DEPTH)):
            parse(src)


def test_evaluation_errors():
    with pytest.raises(EvalError, match="unbound"):
        evaluate(parse("x + 1"), {})
    with pytest.raises(EvalError):
        evaluate(parse("x^0.5"), {"x": -1.0})  # NaN from a composition
    with pytest.raises(EvalError):
        evaluate(parse("1/x"), {"x": np.array([1.0, 0.0])})


def test_vectorized_evaluation():
    x = np.linspace(0.1, 3, 11)
    out = evaluate(parse("log(x) * t + y"), {"t": 2.0, "x": x, "y": 1.0})
    np.testing.assert_allclose(out, 2 * np.log(x) + 1)
    assert isinstance(evaluate(parse("t"), {"t": 1}), float)
    assert evaluate(parse("e"), {}) == math.e
    assert evaluate(parse("tanh(0) + cos(0) + tan(0)"), {}) == 1.0


def test_purity():
    e = parse("sin(x)*exp(-t) + y^3")
    env = {"t": 0.3, "x": 1.7, "y": -2.2}
    assert evaluate(e, env) == evaluate(e, dict(env))


def test_compile_expr():
    _, f = compile_expr("1 - x/10", {"t", "x", "y"})
    assert f(x=5.0) == 0.5
    _, g = compile_expr("10 - t^2/2", {"t"})
    assert g(2.0) == 8.0
    with pytest.raises(SpecError, match="x"):
        compile_expr("t + x", {"t"})


names = st.sampled_from(["t", "x", "y"])
leaves = st.one_of(
    st.floats(0.0, 1e300, allow_nan=False).map(Num),
    names.map(Var),
    st.sampled_from(["pi", "e"]).map(Const),
)


def _extend(children):
    return st.one_of(
        children.map(Neg),
        st.tuples(st.sampled_from("+-*/^"), children, children).map(lambda a: BinOp(*a)),
        st.sampled_from(sorted(FUNCTIONS)).flatmap(
            lambda n: st.lists(children, min_size=FUNCTIONS[n], max_size=FUNCTIONS[n]).map(
                lambda args: Call(n, tuple(args)))),
    )


trees = st.recursive(leaves, _extend, max_leaves=25)


@settings(max_examples=300)
@given(trees)
def test_round_trip(tree):
    assert parse(to_source(tree)) == tree


@settings(max_examples=300)
@given(st.text(alphabet="0123456789.txye+-*/^(), ", max_size=30))
def test_no_crash_on_token_soup(src):
    try:
        e = parse(src)
    except ParseError:
        return
    assert parse(to_source(e)) == e
