"""Bracket-to-certificate pipeline, problem files and solution files.

``run_pipeline`` checks that ``alpha``/``beta`` are a lower/upper pair,
builds the truncated problem, locates a fixed point of the summation
operator and certifies ``alpha <= u <= beta`` together with the residual
of ``u`` in the *original* problem.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Optional, Union

import numpy as np

from . import exprlang
from .direct_solver import NewtonConfig, newton_solve, shooting_solve
from .errors import BoundViolation, EvaluationError, SpecError
from .fixedpoint import SolveConfig, SolveReport, ball_radius, picard_solve
from .grid import GridFunction, TimeScale, delta, delta_delta
from .problem import (
    A2Verdict, BracketCheck, Problem, check_A2_sampled, check_lower, check_upper,
    is_positive_solution, require_full_domain, residual,
)
from .truncation import Bracket, make_auxiliary

log = logging.getLogger(__name__)

CERT_VERSION = "dbvp-cert/1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NONCONVERGED = 2
EXIT_INPUT = 3


# -------------------------------------------------------------------- spec


@dataclass(frozen=True)
class SolverOptions:
    method: str = "auto"  # auto | picard | newton
    tol: float = 1e-10
    max_iter: int = 10_000
    damping: float = 1.0
    grid_density: int = 128
    a2_samples: int = 16
    verify_tol: float = 1e-9

    def __post_init__(self):
        if self.method not in ("auto", "picard", "newton"):
            raise SpecError(f"unknown solver method {self.method!r}")
        for name in ("tol", "verify_tol"):
            v = getattr(self, name)
            if not _is_number(v) or not v > 0:
                raise SpecError(f"solver.{name} must be a number > 0")
        if not _is_number(self.damping) or not 0 < self.damping <= 1:
            raise SpecError("solver.damping must lie in (0, 1]")
        for name, lo in (("max_iter", 1), ("grid_density", 2), ("a2_samples", 2)):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < lo:
                raise SpecError(f"solver.{name} must be an integer >= {lo}")


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _compile(field_name: str, src: str, allowed):
    try:
        return exprlang.compile_expr(src, allowed)
    except SpecError as exc:
        raise SpecError(f"{field_name}: {exc}") from exc


@dataclass(frozen=True)
class ProblemSpec:
    """The file form of a problem together with its bracket.

    ``alpha`` and ``beta`` are expressions in ``t`` or lists of ``T+3``
    numbers; exactly one of ``g_T2`` (a number) and ``g`` (an expression
    in ``t``, evaluated at ``T+2``) is given.
    """

    T: int
    h: str
    alpha: Union[str, list]
    beta: Union[str, list]
    g_T2: Optional[float] = None
    g: Optional[str] = None
    c: float = 1.0
    solver: SolverOptions = field(default_factory=SolverOptions)

    @classmethod
    def from_dict(cls, d: dict) -> "ProblemSpec":
        if not isinstance(d, dict):
            raise SpecError("problem file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise SpecError(f"unknown field(s): {', '.join(sorted(unknown))}")
        missing = {"T", "h", "alpha", "beta"} - set(d)
        if missing:
            raise SpecError(f"missing field(s): {', '.join(sorted(missing))}")
        d = dict(d)
        solver = d.pop("solver", None) or {}
        if not isinstance(solver, dict):
            raise SpecError("solver must be an object")
        sknown = {f.name for f in fields(SolverOptions)}
        if set(solver) - sknown:
            raise SpecError(f"unknown solver option(s): {', '.join(sorted(set(solver) - sknown))}")
        spec = cls(**d, solver=SolverOptions(**solver))
        spec.validate()
        return spec

    @classmethod
    def load(cls, path) -> "ProblemSpec":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise SpecError(f"cannot read {path}: {exc.strerror}") from exc
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
        return cls.from_dict(d)

    def to_dict(self) -> dict:
        d = {"T": self.T, "h": self.h, "alpha": self.alpha, "beta": self.beta, "c": self.c}
        if self.g is not None:
            d["g"] = self.g
        else:
            d["g_T2"] = self.g_T2
        d["solver"] = {f.name: getattr(self.solver, f.name) for f in fields(SolverOptions)}
        return d

    def validate(self):
        if not isinstance(self.T, int) or isinstance(self.T, bool) or self.T < 1:
            raise SpecError("T must be an integer >= 1")
        if not isinstance(self.h, str):
            raise SpecError("h must be an expression string")
        _compile("h", self.h, {"t", "x", "y"})
        if (self.g_T2 is None) == (self.g is None):
            raise SpecError("give exactly one of g_T2 and g")
        if self.g is not None:
            if not isinstance(self.g, str):
                raise SpecError("g must be an expression string in t")
            _compile("g", self.g, {"t"})
        elif not _is_number(self.g_T2):
            raise SpecError("g_T2 must be a finite number")
        if not _is_number(self.c) or not self.c > 0:
            raise SpecError("c must be a number > 0")
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if isinstance(v, str):
                _compile(name, v, {"t"})
            elif isinstance(v, list):
                if len(v) != self.T + 3:
                    raise SpecError(f"{name} has {len(v)} entries, expected T+3 = {self.T + 3}")
                if not all(_is_number(a) for a in v):
                    raise SpecError(f"{name} entries must be finite numbers")
            else:
                raise SpecError(f"{name} must be an expression in t or a list of numbers")

    def g_value(self) -> float:
        if self.g is None:
            return float(self.g_T2)
        _, fn = exprlang.compile_expr(self.g, {"t"})
        try:
            return float(fn(t=float(self.T + 2)))
        except EvaluationError as exc:
            raise SpecError(f"g cannot be evaluated at T+2: {exc}") from exc

    def grid_function(self, name: str) -> GridFunction:
        v = getattr(self, name)
        ts = TimeScale(self.T)
        if isinstance(v, list):
            return GridFunction(v)
        _, fn = exprlang.compile_expr(v, {"t"})
        try:
            return ts.tabulate(lambda t: fn(t=t))
        except EvaluationError as exc:
            raise SpecError(f"{name} cannot be evaluated on [0, T+2]: {exc}") from exc

    def problem(self) -> Problem:
        _, fn = exprlang.compile_expr(self.h, {"t", "x", "y"})
        g = self.g_value()
        if g < 0:
            raise SpecError(f"g(T+2) = {g} is negative")
        return Problem(TimeScale(self.T), fn, g, self.c)


# ------------------------------------------------------------ enclosure


@dataclass(frozen=True)
class ViolationDiagnostic:
    """Quantities at the worst enclosure violation ``l``.

    ``v = u - beta`` (side ``"upper"``) or ``alpha - u`` (side ``"lower"``).
    At an interior maximum of ``v`` one has ``v^Δ(l-1) >= 0 >= v^Δ(l)``, so
    ``v^ΔΔ(l-1) <= 0``, while a genuine fixed point of the truncated problem
    would force ``v^ΔΔ(l-1) >= v(l) / (v(l) + 1) > 0``.
    """

    side: str
    location: int
    v: float
    sign_pattern: Optional[tuple]  # (v^Δ(l-1), v^Δ(l)); None at an endpoint
    second_difference_gap: Optional[float]  # v^ΔΔ(l-1), e.g. u^ΔΔ - beta^ΔΔ
    ratio: float  # v / (v + 1)

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "location": self.location,
            "v": self.v,
            "sign_pattern": list(self.sign_pattern) if self.sign_pattern else None,
            "second_difference_gap": self.second_difference_gap,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class EnclosureVerdict:
    ok: bool
    tol: float
    lower_slacks: GridFunction  # u - alpha
    upper_slacks: GridFunction  # beta - u
    diagnostic: Optional[ViolationDiagnostic] = None

    @property
    def min_lower_slack(self) -> float:
        return float(np.min(self.lower_slacks.values))

    @property
    def min_upper_slack(self) -> float:
        return float(np.min(self.upper_slacks.values))

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "tol": self.tol,
            "min_lower_slack": self.min_lower_slack,
            "min_upper_slack": self.min_upper_slack,
            "lower_slacks": self.lower_slacks.values.tolist(),
            "upper_slacks": self.upper_slacks.values.tolist(),
            "diagnostic": self.diagnostic.to_dict() if self.diagnostic else None,
        }


def _diagnose(u: GridFunction, b: Bracket, side: str) -> ViolationDiagnostic:
    v = (u - b.beta) if side == "upper" else (b.alpha - u)
    ell = int(np.argmax(v.values))
    vl = v[ell]
    n = len(v) - 1
    if 1 <= ell <= n - 1:
        dv = delta(v)
        pattern = (dv[ell - 1], dv[ell])
        gap = delta_delta(v)[ell - 1]
    else:
        pattern, gap = None, None
    return ViolationDiagnostic(side, ell, vl, pattern, gap, vl / (vl + 1.0))


def enclosure_check(u: GridFunction, b: Bracket, tol: float = 1e-9) -> EnclosureVerdict:
    """``alpha(t) - tol <= u(t) <= beta(t) + tol`` for every ``t`` in ``[0, T+2]``."""
    require_full_domain(b.T, u)
    lo = u - b.alpha
    hi = b.beta - u
    if lo.values.min() >= -tol and hi.values.min() >= -tol:
        return EnclosureVerdict(True, tol, lo, hi)
    side = "upper" if -hi.values.min() >= -lo.values.min() else "lower"
    return EnclosureVerdict(False, tol, lo, hi, _diagnose(u, b, side))


# ---------------------------------------------------------- certificate


@dataclass
class Hypotheses:
    g_nonneg: dict
    lower: Optional[BracketCheck] = None
    upper: Optional[BracketCheck] = None
    ordered: Optional[dict] = None
    a2: Optional[A2Verdict] = None

    def failures(self) -> list:
        out = []
        if not self.g_nonneg["ok"]:
            out.append(f"g(T+2) >= 0 fails: g(T+2) = {self.g_nonneg['value']:.17g}")
        if self.lower is not None and not self.lower.ok:
            out.append(self.lower.describe())
        if self.upper is not None and not self.upper.ok:
            out.append(self.upper.describe())
        if self.ordered is not None and not self.ordered["ok"]:
            out.append(f"alpha <= beta fails at t={self.ordered['location']} "
                       f"(beta - alpha = {self.ordered['min_gap']:.6g})")
        return out

    def warnings(self) -> list:
        if self.a2 is not None and not self.a2.ok:
            w = self.a2.worst
            return [f"sampled monotonicity check of h in y failed at t={w['t']}, x={w['x']:.6g}: "
                    f"h(y2={w['y2']:.6g}) exceeds h(y1={w['y1']:.6g}) by {w['increase']:.6g}"]
        return []

    def to_dict(self) -> dict:
        def bc(c):
            if c is None:
                return None
            return {
                "ok": c.ok,
                "tol": c.tol,
                "difference_slacks": c.difference.values.tolist(),
                "left_slack": c.left,
                "right_slack": c.right,
                "first_violation": (
                    {"row": c.first_violation[0], "t": c.first_violation[1],
                     "slack": c.first_violation[2]} if c.first_violation else None
                ),
            }

        a2 = None
        if self.a2 is not None:
            a2 = {"ok": self.a2.ok, "label": self.a2.label, "samples": self.a2.samples,
                  "worst": self.a2.worst}
        return {
            "g_nonneg": self.g_nonneg,
            "lower": bc(self.lower),
            "upper": bc(self.upper),
            "ordered": self.ordered,
            "a2": a2,
        }


@dataclass
class Certificate:
    status: str  # granted | granted-with-warning | denied
    exit_code: int
    hypotheses: Optional[Hypotheses]
    reason: Optional[str] = None
    warnings: list = field(default_factory=list)
    M: Optional[float] = None
    ball_radius: Optional[float] = None
    solve: Optional[SolveReport] = None
    attempts: list = field(default_factory=list)
    enclosure: Optional[EnclosureVerdict] = None
    original_residual: Optional[float] = None
    agreement: Optional[bool] = None
    positive: Optional[bool] = None
    crosscheck: Optional[dict] = None

    @property
    def granted(self) -> bool:
        return self.status != "denied"

    def to_dict(self) -> dict:
        return _jsonable({
            "version": CERT_VERSION,
            "status": self.status,
            "granted": self.granted,
            "exit_code": self.exit_code,
            "reason": self.reason,
            "warnings": list(self.warnings),
            "hypotheses": self.hypotheses.to_dict() if self.hypotheses else None,
            "M": self.M,
            "ball_radius": self.ball_radius,
            "solve": self.solve.to_dict() if self.solve else None,
            "attempts": self.attempts,
            "enclosure": self.enclosure.to_dict() if self.enclosure else None,
            "original_residual": self.original_residual,
            "agreement": self.agreement,
            "positive": self.positive,
            "crosscheck": self.crosscheck,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


# ------------------------------------------------------------- pipeline


def _as_spec(spec) -> ProblemSpec:
    return spec if isinstance(spec, ProblemSpec) else ProblemSpec.from_dict(spec)


def check_hypotheses(spec: ProblemSpec) -> tuple:
    """Evaluate every hypothesis; returns ``(Hypotheses, problem, alpha, beta)``.

    ``problem`` is ``None`` when ``g(T+2) < 0`` (nothing else is checked then).
    """
    opts = spec.solver
    g = spec.g_value()
    alpha = spec.grid_function("alpha")
    beta = spec.grid_function("beta")
    hyp = Hypotheses(g_nonneg={"ok": g >= 0, "value": g})
    if g < 0:
        return hyp, None, alpha, beta
    p = spec.problem()
    hyp.lower = check_lower(p, alpha, opts.verify_tol)
    hyp.upper = check_upper(p, beta, opts.verify_tol)
    gap = beta.values - alpha.values
    k = int(np.argmin(gap))
    hyp.ordered = {"ok": bool(gap[k] >= 0), "min_gap": float(gap[k]), "location": k}
    if hyp.ordered["ok"]:
        a, b = alpha.values, beta.values
        t = np.arange(1, p.T + 2)
        ylo = a[t] - b[t - 1]
        yhi = b[t] - a[t - 1]
        yhi = np.where(yhi > ylo, yhi, ylo + 1.0)
        box = np.stack([a[t], b[t], ylo, yhi], axis=1)
        hyp.a2 = check_A2_sampled(p, box, opts.a2_samples, opts.verify_tol)
    return hyp, p, alpha, beta


def _ladder(opts: SolverOptions) -> list:
    if opts.method == "picard":
        return [opts.damping]
    return list(dict.fromkeys([opts.damping, 0.5, 0.25]))


def solve_auxiliary(ap, opts: SolverOptions) -> tuple:
    """Picard over the damping ladder, then Newton; returns ``(report, attempts)``.

    Newton starts from the bracket midpoint and, under ``method="auto"``,
    once more from a shooting estimate when the first start stalls.
    """
    attempts = []
    rep = None
    if opts.method in ("auto", "picard"):
        for lam in _ladder(opts):
            rep = picard_solve(ap, SolveConfig(opts.tol, opts.max_iter, lam))
            attempts.append({"method": "picard", "damping": lam, "converged": rep.converged,
                             "iterations": rep.iterations, "final_gap": rep.final_gap})
            if rep.converged:
                return rep, attempts
    if opts.method in ("auto", "newton"):
        starts = [("midpoint", lambda: ap.bracket.midpoint())]
        if opts.method == "auto":
            starts.append(("shooting", lambda: shooting_solve(ap).u))
        for label, start in starts:
            nrep = _newton_aux(ap, start(), opts)
            attempts.append({"method": "newton", "start": label, "converged": nrep.converged,
                             "iterations": nrep.iterations, "final_gap": nrep.final_gap})
            if nrep.converged:
                return nrep, attempts
            if rep is None or nrep.final_gap < rep.final_gap:
                rep = nrep
    return rep, attempts


def _newton_aux(ap, u0: GridFunction, opts: SolverOptions) -> SolveReport:
    # the fixed-point gap is a double sum of residuals, so aim below tol / #terms;
    # the run is judged on gap and residual, not on reaching that aim
    factor = (ap.T + 2) * (ap.T + 3) / 2
    ncfg = NewtonConfig(tol=opts.tol / factor, max_iter=max(100, min(opts.max_iter, 1000)))
    nrep = newton_solve(ap, u0, ncfg)
    ok = nrep.final_gap <= opts.tol and nrep.final_residual <= opts.tol
    msg = "" if ok else (nrep.message or f"fixed-point gap {nrep.final_gap:.3g} exceeds tol")
    return replace(nrep, converged=ok, message=msg)


def _deny(hyp, code, reason, **kw) -> Certificate:
    return Certificate("denied", code, hyp, reason=reason, **kw)


def run_pipeline(spec) -> Certificate:
    """Hypotheses, truncation, fixed point, enclosure, original residual, positivity.

    Never raises for problem-level failures: invalid input, evaluation
    errors and failed checks all come back as a denied certificate with
    ``reason`` and ``exit_code`` set.
    """
    try:
        spec = _as_spec(spec)
        hyp, p, alpha, beta = check_hypotheses(spec)
    except SpecError as exc:
        return _deny(None, EXIT_INPUT, f"invalid problem: {exc}")
    except EvaluationError as exc:
        return _deny(None, EXIT_INPUT, f"evaluation error during hypothesis checks: {exc}")

    failures = hyp.failures()
    if failures:
        return _deny(hyp, EXIT_FAILED, "; ".join(failures), warnings=hyp.warnings())
    opts = spec.solver
    warnings = hyp.warnings()
    bracket = Bracket(alpha, beta)
    cert = Certificate("denied", EXIT_FAILED, hyp, warnings=warnings)
    try:
        ap = make_auxiliary(p, bracket, opts.grid_density)
        cert.M = ap.M
        cert.ball_radius = ball_radius(ap.M, p.T)
        rep, cert.attempts = solve_auxiliary(ap, opts)
    except BoundViolation as exc:
        cert.reason = f"bound M underestimated: {exc}"
        cert.exit_code = EXIT_NONCONVERGED
        return cert
    except EvaluationError as exc:
        cert.reason = f"evaluation error while solving: {exc}"
        cert.exit_code = EXIT_INPUT
        return cert
    cert.solve = rep
    if not rep.converged:
        cert.reason = f"solver did not converge ({rep.method}: {rep.message})"
        cert.exit_code = EXIT_NONCONVERGED
        return cert

    u = rep.u
    try:
        cert.enclosure = enclosure_check(u, bracket, opts.verify_tol)
        cert.agreement = bool(np.array_equal(ap.nonlinearity(u.values), p.nonlinearity(u.values)))
        cert.original_residual = residual(p, u).worst
        cert.positive = is_positive_solution(u)
        cert.crosscheck = _crosscheck(p, bracket, u)
    except EvaluationError as exc:
        cert.reason = f"evaluation error during verification: {exc}"
        cert.exit_code = EXIT_INPUT
        return cert

    problems = []
    if not cert.enclosure.ok:
        d = cert.enclosure.diagnostic
        problems.append(f"enclosure fails on the {d.side} side at t={d.location} (v = {d.v:.6g})")
    if cert.original_residual > opts.verify_tol:
        problems.append(f"original residual {cert.original_residual:.3g} exceeds {opts.verify_tol:g}")
    if problems:
        cert.reason = "; ".join(problems)
        return cert
    cert.status = "granted-with-warning" if warnings else "granted"
    cert.exit_code = EXIT_OK
    return cert


def _crosscheck(p: Problem, b: Bracket, u: GridFunction) -> dict:
    """Newton on the original problem from the bracket midpoint; informational only."""
    try:
        rep = newton_solve(p, b.midpoint(), NewtonConfig(tol=1e-12))
    except EvaluationError as exc:
        return {"method": "newton", "converged": False, "message": str(exc)}
    dist = float(np.max(np.abs(rep.u.values - u.values)))
    return {"method": "newton", "converged": rep.converged, "iterations": rep.iterations,
            "residual": rep.final_residual, "distance": dist}


# -------------------------------------------------------- verification


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    residual: float
    bc_left: float
    bc_right_gap: float
    max_abs_residual: float
    enclosure: EnclosureVerdict
    positive: bool
    tol: float

    def to_dict(self) -> dict:
        return _jsonable({
            "version": CERT_VERSION,
            "ok": self.ok,
            "residual": self.residual,
            "bc_left": self.bc_left,
            "bc_right_gap": self.bc_right_gap,
            "max_abs_residual": self.max_abs_residual,
            "enclosure": self.enclosure.to_dict(),
            "positive": self.positive,
            "tol": self.tol,
        })


def verify_solution(spec, u: GridFunction) -> VerifyReport:
    """Residual in the original problem and enclosure of an externally supplied ``u``."""
    spec = _as_spec(spec)
    p = spec.problem()
    alpha, beta = spec.grid_function("alpha"), spec.grid_function("beta")
    require_full_domain(p.T, u)
    tol = spec.solver.verify_tol
    rr = residual(p, u)
    try:
        enc = enclosure_check(u, Bracket(alpha, beta), tol)
    except ValueError as exc:
        raise SpecError(f"invalid bracket: {exc}") from exc
    ok = rr.worst <= tol and enc.ok
    return VerifyReport(ok, rr.worst, rr.bc_left, rr.bc_right_gap, rr.max_abs_residual,
                        enc, is_positive_solution(u), tol)


# ------------------------------------------------------ solution files


def format_solution_csv(u: GridFunction) -> str:
    buf = io.StringIO()
    buf.write("t,u\n")
    for t, v in zip(u.indices, u.values):
        buf.write(f"{t},{v:.17g}\n")
    return buf.getvalue()


def parse_solution_csv(text: str) -> GridFunction:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r]
    if not rows or [c.strip() for c in rows[0]] != ["t", "u"]:
        raise SpecError("solution CSV must start with the header 't,u'")
    ts, us = [], []
    for n, r in enumerate(rows[1:], start=2):
        if len(r) != 2:
            raise SpecError(f"line {n}: expected 2 columns")
        try:
            ts.append(int(r[0]))
            us.append(float(r[1]))
        except ValueError as exc:
            raise SpecError(f"line {n}: {exc}") from exc
    if ts != list(range(len(ts))):
        raise SpecError("solution CSV rows must have t = 0, 1, 2, ... in order")
    if not all(math.isfinite(v) for v in us):
        raise SpecError("solution values must be finite")
    return GridFunction(us)


def load_solution(path) -> GridFunction:
    """Read a solution from CSV (``t,u``) or from a certificate JSON written by ``solve``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from exc
    if text.lstrip().startswith("{"):
        try:
            d = json.loads(text)
            u = d["solve"]["u"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise SpecError(f"{path}: not a certificate with a solution") from exc
        if not isinstance(u, list) or not all(_is_number(v) for v in u):
            raise SpecError(f"{path}: solution values must be finite numbers")
        return GridFunction(u)
    return parse_solution_csv(text)


__all__ = [
    "CERT_VERSION", "Certificate", "EnclosureVerdict", "Hypotheses", "ProblemSpec",
    "SolverOptions", "VerifyReport", "ViolationDiagnostic", "check_hypotheses",
    "enclosure_check", "format_solution_csv", "load_solution", "parse_solution_csv",
    "run_pipeline", "solve_auxiliary", "verify_solution",
]
