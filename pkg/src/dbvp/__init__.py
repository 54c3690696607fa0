"""Lower/upper solution enclosures for the discrete mixed boundary value problem

    u^ΔΔ(t-1) + h(t, u(t), u^Δ(t-1)) = 0,  t in [1, T+1];  u^Δ(0) = 0;  u(T+2) = c g(T+2).
"""

from .direct_solver import NewtonConfig, brute_force_solve, newton_solve, shooting_solve
from .errors import BoundViolation, DbvpError, DomainError, EvaluationError, SpecError
from .exprlang import EvalError, ParseError, evaluate, free_vars, parse
from .fixedpoint import SolveConfig, SolveReport, apply_T, ball_radius, picard_solve
from .grid import GridFunction, TimeScale, delta, delta_delta, sup_norm
from .pipeline import (
    Certificate, ProblemSpec, SolverOptions, enclosure_check, run_pipeline, verify_solution,
)
from .problem import (
    Problem, check_A2_sampled, check_lower, check_upper, is_positive_solution, is_solution,
    residual,
)
from .truncation import AuxiliaryProblem, Bracket, estimate_M, h_tilde, make_auxiliary, sigma

__version__ = "0.1.0"

__all__ = [
    "AuxiliaryProblem",
    "BoundViolation",
    "Bracket",
    "Certificate",
    "DbvpError",
    "DomainError",
    "EvalError",
    "EvaluationError",
    "GridFunction",
    "NewtonConfig",
    "ParseError",
    "Problem",
    "ProblemSpec",
    "SolveConfig",
    "SolveReport",
    "SolverOptions",
    "SpecError",
    "TimeScale",
    "apply_T",
    "ball_radius",
    "brute_force_solve",
    "check_A2_sampled",
    "check_lower",
    "check_upper",
    "delta",
    "delta_delta",
    "enclosure_check",
    "estimate_M",
    "evaluate",
    "free_vars",
    "h_tilde",
    "is_positive_solution",
    "is_solution",
    "make_auxiliary",
    "newton_solve",
    "parse",
    "picard_solve",
    "residual",
    "run_pipeline",
    "shooting_solve",
    "sigma",
    "sup_norm",
    "verify_solution",
]
