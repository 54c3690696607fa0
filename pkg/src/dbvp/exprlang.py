"""A small arithmetic expression language for problem files.

Grammar, loosest to tightest binding::

    expr    := expr ('+' | '-') expr        left associative
             | expr ('*' | '/') expr        left associative
             | ('-' | '+') expr             prefix
             | expr '^' expr                right associative
             | NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Unary minus binds looser than ``^``, so ``-x^2`` is ``-(x^2)``; the
exponent itself may carry a sign (``2^-1`` is ``0.5``).

Variables are ``t``, ``x`` and ``y``; constants are ``pi`` and ``e``.
Evaluation is numpy-vectorized and never yields NaN or infinity: any
domain error or non-finite intermediate raises :class:`EvalError`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .errors import EvaluationError, SpecError

VARIABLES = frozenset({"t", "x", "y"})
CONSTANTS = {"pi": math.pi, "e": math.e}
FUNCTIONS = {
    "sin": 1, "cos": 1, "tan": 1, "exp": 1, "log": 1, "sqrt": 1,
    "abs": 1, "tanh": 1, "min": 2, "max": 2, "pow": 2,
}
MAX_DEPTH = 200


class ParseError(SpecError):
    def __init__(self, offset: int, expected: str, found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {offset}: expected {expected}, found {found}")


class EvalError(EvaluationError):
    pass


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


Expr = Union[Num, Var, Const, Neg, BinOp, Call]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)

# left binding powers of infix operators
_INFIX = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_PREFIX_BP = 30


@dataclass
class _Tok:
    kind: str  # num | name | op | end
    text: str
    offset: int  # byte offset into the UTF-8 source


def _tokenize(src: str) -> list:
    toks = []
    pos = 0
    byte = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(byte, "a number, name, operator or parenthesis", repr(src[pos]))
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            toks.append(_Tok(kind, text, byte))
        byte += len(text.encode("utf-8"))
        pos = m.end()
    toks.append(_Tok("end", "", byte))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        raise ParseError(t.offset, expected, repr(t.text) if t.kind != "end" else "end of input")

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind != "op":
            self.fail(repr(text))
        self.advance()

    def expression(self, rbp: int = 0) -> Expr:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail(f"at most {MAX_DEPTH} levels of nesting")
        left = self.prefix()
        while self.tok.kind == "op" and _INFIX.get(self.tok.text, 0) > rbp:
            op = self.advance().text
            # ^ is right associative; its exponent may start with a sign (prefix)
            right = self.expression(_INFIX[op] - 1 if op == "^" else _INFIX[op])
            left = BinOp(op, left, right)
        self.depth -= 1
        return left

    def prefix(self) -> Expr:
        t = self.advance()
        if t.kind == "num":
            v = float(t.text)
            if not math.isfinite(v):
                self.i -= 1
                self.fail("a finite numeric literal")
            return Num(v)
        if t.kind == "name":
            return self.name(t)
        if t.kind == "op" and t.text in "+-":
            operand = self.expression(_PREFIX_BP)
            return Neg(operand) if t.text == "-" else operand
        if t.kind == "op" and t.text == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        self.i -= 1
        self.fail("an operand")

    def name(self, t: _Tok) -> Expr:
        n = t.text
        if n in FUNCTIONS:
            if not (self.tok.kind == "op" and self.tok.text == "("):
                self.fail(f"'(' after function {n}")
            self.advance()
            args = [self.expression(0)]
            while self.tok.kind == "op" and self.tok.text == ",":
                self.advance()
                args.append(self.expression(0))
            self.expect(")")
            if len(args) != FUNCTIONS[n]:
                raise ParseError(t.offset, f"{FUNCTIONS[n]} argument(s) to {n}",
                                 f"{len(args)} argument(s)")
            return Call(n, tuple(args))
        if n in VARIABLES:
            return Var(n)
        if n in CONSTANTS:
            return Const(n)
        self.i -= 1
        self.fail("a variable (t, x, y), constant (pi, e) or function name")


def parse(src: str) -> Expr:
    """Parse ``src`` into an expression tree; raises :class:`ParseError`."""
    if not isinstance(src, str):
        raise TypeError("expression source must be a string")
    p = _Parser(src)
    if p.tok.kind == "end":
        p.fail("an expression")
    e = p.expression(0)
    if p.tok.kind != "end":
        p.fail("an operator or end of input")
    return e


def free_vars(e: Expr) -> frozenset:
    if isinstance(e, Var):
        return frozenset({e.name})
    if isinstance(e, Neg):
        return free_vars(e.operand)
    if isinstance(e, BinOp):
        return free_vars(e.left) | free_vars(e.right)
    if isinstance(e, Call):
        return frozenset().union(*(free_vars(a) for a in e.args))
    return frozenset()


def to_source(e: Expr) -> str:
    """Fully parenthesized text that re-parses to the same tree."""
    if isinstance(e, Num):
        return repr(e.value)
    if isinstance(e, (Var, Const)):
        return e.name
    if isinstance(e, Neg):
        return f"(-{to_source(e.operand)})"
    if isinstance(e, BinOp):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    return f"{e.name}(" + ", ".join(to_source(a) for a in e.args) + ")"


def _finite(v, what: str):
    if not np.all(np.isfinite(v)):
        raise EvalError(f"{what} produced a non-finite value")
    return v


def _eval(e: Expr, env) -> np.ndarray:
    if isinstance(e, Num):
        return np.float64(e.value)
    if isinstance(e, Const):
        return np.float64(CONSTANTS[e.name])
    if isinstance(e, Var):
        try:
            return np.asarray(env[e.name], dtype=float)
        except KeyError:
            raise EvalError(f"unbound variable {e.name}") from None
    if isinstance(e, Neg):
        return -_eval(e.operand, env)
    if isinstance(e, BinOp):
        a = _eval(e.left, env)
        b = _eval(e.right, env)
        if e.op == "+":
            return _finite(a + b, "addition")
        if e.op == "-":
            return _finite(a - b, "subtraction")
        if e.op == "*":
            return _finite(a * b, "multiplication")
        if e.op == "/":
            if np.any(b == 0):
                raise EvalError("division by zero")
            return _finite(a / b, "division")
        return _finite(np.power(a, b), "power")
    args = [_eval(a, env) for a in e.args]
    n = e.name
    if n == "log":
        if np.any(args[0] <= 0):
            raise EvalError("log of a non-positive argument")
        return np.log(args[0])
    if n == "sqrt":
        if np.any(args[0] < 0):
            raise EvalError("sqrt of a negative argument")
        return np.sqrt(args[0])
    if n == "min":
        return np.minimum(*args)
    if n == "max":
        return np.maximum(*args)
    if n == "pow":
        return _finite(np.power(*args), "pow")
    fn = {"sin": np.sin, "cos": np.cos, "tan": np.tan, "exp": np.exp,
          "abs": np.abs, "tanh": np.tanh}[n]
    return _finite(fn(args[0]), n)


def evaluate(e: Expr, env: Mapping[str, object] = None):
    """Evaluate ``e`` with variables bound by ``env`` (scalars or arrays).

    Returns a float for scalar inputs and an ndarray otherwise.
    """
    env = {} if env is None else env
    with np.errstate(all="ignore"):
        out = _eval(e, env)
    out = _finite(np.asarray(out, dtype=float), "expression")
    return float(out) if out.ndim == 0 else out


def compile_expr(src: str, allowed=VARIABLES):
    """Parse ``src``, check its variables against ``allowed`` and return ``(expr, fn)``.

    ``fn(t, x, y)`` evaluates the expression, ignoring unused arguments.
    """
    e = parse(src)
    extra = free_vars(e) - frozenset(allowed)
    if extra:
        raise SpecError(
            f"expression {src!r} uses {', '.join(sorted(extra))}; only "
            f"{', '.join(sorted(allowed))} allowed"
        )

    def fn(t=0.0, x=0.0, y=0.0):
        return evaluate(e, {"t": t, "x": x, "y": y})

    return e, fn
