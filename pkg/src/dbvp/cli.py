"""Command-line interface: ``dbvp check|solve|verify``.

Exit codes: 0 granted/verified, 1 hypothesis or verification failure,
2 solver non-convergence, 3 input or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .errors import DbvpError, EvaluationError, SpecError
from .pipeline import (
    EXIT_FAILED, EXIT_INPUT, EXIT_OK, ProblemSpec, check_hypotheses,
    format_solution_csv, load_solution, run_pipeline, verify_solution,
)


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgParser(prog="dbvp", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check the lower/upper solution hypotheses only")
    c.add_argument("spec", type=Path)
    c.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("solve", help="solve and certify alpha <= u <= beta")
    s.add_argument("spec", type=Path)
    s.add_argument("--method", choices=("auto", "picard", "newton"))
    s.add_argument("--tol", type=float)
    s.add_argument("--max-iter", type=int)
    s.add_argument("--damping", type=float)
    s.add_argument("--out", type=Path, help="write the output here instead of stdout")
    s.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="csv: solution rows 't,u'; json: the full certificate")

    v = sub.add_parser("verify", help="check an externally supplied solution")
    v.add_argument("spec", type=Path)
    v.add_argument("solution", type=Path, help="CSV 't,u' or a certificate JSON")
    v.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _err(msg: str):
    print(f"dbvp: {msg}", file=sys.stderr)


def _emit(text: str, out: Path = None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _cmd_check(args) -> int:
    spec = ProblemSpec.load(args.spec)
    hyp, _, _, _ = check_hypotheses(spec)
    failures = hyp.failures()
    if args.format == "json":
        print(json.dumps({"ok": not failures, "failures": failures,
                          "warnings": hyp.warnings(), "hypotheses": hyp.to_dict()}, indent=2))
    else:
        checks = [("g(T+2) >= 0", hyp.g_nonneg["ok"]),
                  ("lower solution", hyp.lower and hyp.lower.ok),
                  ("upper solution", hyp.upper and hyp.upper.ok),
                  ("alpha <= beta", hyp.ordered and hyp.ordered["ok"]),
                  ("h non-increasing in y (sampled)", hyp.a2 and hyp.a2.ok)]
        for name, ok in checks:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    for f in failures:
        _err(f)
    for w in hyp.warnings():
        _err(f"warning: {w}")
    return EXIT_FAILED if failures else EXIT_OK


def _cmd_solve(args) -> int:
    spec = ProblemSpec.load(args.spec)
    overrides = {k: getattr(args, a) for k, a in
                 (("method", "method"), ("tol", "tol"), ("max_iter", "max_iter"), ("damping", "damping"))
                 if getattr(args, a) is not None}
    if overrides:
        spec = replace(spec, solver=replace(spec.solver, **overrides))
    cert = run_pipeline(spec)
    if args.format == "json":
        _emit(cert.to_json() + "\n", args.out)
    elif cert.solve is not None:
        _emit(format_solution_csv(cert.solve.u), args.out)
    if cert.granted:
        for w in cert.warnings:
            _err(f"warning: {w}")
        _err(f"{cert.status}: {spec.solver.verify_tol:g}-enclosure holds, "
             f"original residual {cert.original_residual:.3g} ({cert.solve.method})")
    else:
        _err(f"denied: {cert.reason}")
        if cert.solve is not None and not cert.solve.converged:
            _err(f"best iterate: gap {cert.solve.final_gap}, residual {cert.solve.final_residual:.3g} "
                 f"after {cert.solve.iterations} iterations")
    return cert.exit_code


def _cmd_verify(args) -> int:
    spec = ProblemSpec.load(args.spec)
    u = load_solution(args.solution)
    if len(u) != spec.T + 3:
        raise SpecError(f"solution has {len(u)} points, expected T+3 = {spec.T + 3}")
    rep = verify_solution(spec, u)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(f"residual          {rep.max_abs_residual:.3g}")
        print(f"u(1) - u(0)       {rep.bc_left:.3g}")
        print(f"u(T+2) - c g(T+2) {rep.bc_right_gap:.3g}")
        print(f"min(u - alpha)    {rep.enclosure.min_lower_slack:.6g}")
        print(f"min(beta - u)     {rep.enclosure.min_upper_slack:.6g}")
        print(f"positive          {rep.positive}")
    if not rep.ok:
        why = []
        if rep.residual > rep.tol:
            why.append(f"residual {rep.residual:.3g} exceeds {rep.tol:g}")
        if not rep.enclosure.ok:
            d = rep.enclosure.diagnostic
            why.append(f"enclosure fails on the {d.side} side at t={d.location}")
        _err("verification failed: " + "; ".join(why))
        return EXIT_FAILED
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    cmd = {"check": _cmd_check, "solve": _cmd_solve, "verify": _cmd_verify}[args.command]
    try:
        return cmd(args)
    except (SpecError, EvaluationError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except DbvpError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
