"""Exact arithmetic and certification tools for Mahler equations in two radices."""

__version__ = "0.1.0"

from .errors import (
    MahlerError,
    PoleProximityError,
    PrecisionError,
    SeedInconsistentError,
    SystemBuildError,
)
from .exactnum import LaurentTrunc, Poly, RatFunc, Rational, section_ratfunc
from .exprparse import ExprError, format_ratfunc, parse_ratfunc_expr
from .mahler import (
    Inconsistent,
    MahlerEquation,
    Underdetermined,
    apply_operator,
    normalize_equation,
    solve_bound,
    solve_series,
)
from .probe import base_evaluator, continue_outward, growth_check, radius_estimate
from .rationality import (
    NO_SOLUTION,
    CertifyFailure,
    NoSolution,
    RationalityCertificate,
    certify_rational,
    pade_reconstruct,
    verify_certificate,
)
from .sysbuild import (
    DependenceResult,
    MahlerSystem,
    build_system,
    check_consistency,
    lift_dependence_check,
    lin_dep_test,
    mult_independent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
