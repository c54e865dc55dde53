"""Command-line front end: ``mahlerkit <mode> <problem-file> ...``.

Exit codes: 0 success, 2 honest failure (caps exhausted, no reconstruction,
insufficient precision), 3 hypothesis violated or seed inconsistent,
4 input error.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .errors import PoleProximityError, PrecisionError, SeedInconsistentError, SystemBuildError
from .exactnum import RatFunc
from .exprparse import ExprError, format_rational, format_ratfunc, parse_ratfunc_expr, parse_rational
from .mahler import Inconsistent, MahlerEquation, Underdetermined, normalize_equation, solve_series
from .probe import choose_r0, growth_check, radius_estimate
from .rationality import CertifyFailure, certify_rational
from .sysbuild import MahlerSystem, build_system, check_consistency, mat_det

SCHEMA_VERSION = "1"
MODES = ("solve", "build-system", "check-consistency", "certify", "probe")

EXIT_OK, EXIT_FAILURE, EXIT_REFUSED, EXIT_INPUT = 0, 2, 3, 4


class InputError(ValueError):
    pass


@dataclass
class ProblemFile:
    p: int
    q: int | None
    equations: list[list[RatFunc]]
    seed: list[Fraction]
    seed_start: int = 0
    n_max: int = 1024
    d_max: int = 64
    terms: int = 64
    mode: str | None = None
    probe: dict[str, Any] = field(default_factory=dict)
    system: dict[str, Any] | None = None

    def equation(self, k: int) -> MahlerEquation:
        radix = self.p if k == 0 else self.q
        if radix is None or k >= len(self.equations):
            raise InputError(f"equation {k + 1} is required for this mode")
        return MahlerEquation(radix, tuple(self.equations[k]))


def _expr(text: Any, where: str) -> RatFunc:
    if isinstance(text, int):
        return RatFunc.coerce(text)
    if not isinstance(text, str):
        raise InputError(f"{where}: expected an expression string")
    try:
        return parse_ratfunc_expr(text)
    except ExprError as exc:
        raise InputError(f"{where}: {exc}") from exc


def parse_problem(data: Any) -> ProblemFile:
    if not isinstance(data, dict):
        raise InputError("problem document must be an object")
    schema = str(data.get("schema", SCHEMA_VERSION))
    if schema != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {schema!r}")
    try:
        p = int(data["p"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("field 'p' must be an integer") from exc
    q = data.get("q")
    if q is not None:
        if not isinstance(q, int):
            raise InputError("field 'q' must be an integer")
    for name, r in (("p", p), ("q", q)):
        if r is not None and r < 2:
            raise InputError(f"radix {name} must be at least 2")
    eqs_raw = data.get("equations")
    if not isinstance(eqs_raw, list) or not eqs_raw or len(eqs_raw) > 2:
        raise InputError("'equations' must list one or two coefficient lists")
    equations = []
    for k, coeffs in enumerate(eqs_raw):
        if not isinstance(coeffs, list):
            raise InputError(f"equation {k + 1} must be a list of coefficients b_0..b_(m-1)")
        equations.append([_expr(c, f"equation {k + 1}, b_{i}") for i, c in enumerate(coeffs)])
    seed_raw = data.get("seed", {})
    if isinstance(seed_raw, list):
        seed_raw = {"values": seed_raw}
    try:
        seed = [parse_rational(v) for v in seed_raw.get("values", [])]
        start = int(seed_raw.get("start", 0))
    except (ValueError, AttributeError) as exc:
        raise InputError(f"bad seed: {exc}") from exc
    caps = data.get("caps", {})
    mode = data.get("mode")
    if mode is not None and mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    try:
        problem = ProblemFile(
            p=p,
            q=q,
            equations=equations,
            seed=seed,
            seed_start=start,
            n_max=int(caps.get("N_max", 1024)),
            d_max=int(caps.get("d_max", 64)),
            terms=int(data.get("terms", 64)),
            mode=mode,
            probe=dict(data.get("probe", {})),
            system=data.get("system"),
        )
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad numeric field: {exc}") from exc
    return problem


# -- serialization -----------------------------------------------------------------


def _fmt_float(v: float) -> Any:
    if math.isinf(v) or math.isnan(v):
        return str(v)
    return v


def _equation_doc(eq: MahlerEquation) -> dict:
    return {"p": eq.p, "coeffs": [format_ratfunc(b) for b in eq.coeffs], "text": str(eq)}


def _system_doc(sys_: MahlerSystem) -> dict:
    return {
        "p": sys_.p,
        "q": sys_.q,
        "n": sys_.n,
        "A": [[format_ratfunc(e) for e in row] for row in sys_.A],
        "B": [[format_ratfunc(e) for e in row] for row in sys_.B],
        "basis_tags": [list(t) for t in sys_.basis_tags],
    }


def _refused(reason: str, details: str) -> tuple[int, dict]:
    return EXIT_REFUSED, {"status": "failure", "reason": reason, "details": details}


# -- modes ----------------------------------------------------------------------------


def _run_solve(pb: ProblemFile) -> tuple[int, dict]:
    eq = pb.equation(0)
    norm = normalize_equation(eq)
    res = solve_series(norm[0], pb.seed, pb.terms, pb.seed_start)
    if isinstance(res, Inconsistent):
        return _refused("seed_inconsistent", f"index {res.index}: {res.detail}")
    if isinstance(res, Underdetermined):
        return EXIT_FAILURE, {
            "status": "failure",
            "reason": "underdetermined",
            "details": f"seed needs {res.required} values, got {res.given}",
        }
    return EXIT_OK, {
        "status": "ok",
        "equation": _equation_doc(eq),
        "normalized": [_equation_doc(e) for e in norm],
        "series": {
            "start": res.val,
            "order": res.order,
            "coefficients": [format_rational(c) for c in res.coeffs],
        },
    }


def _run_certify(pb: ProblemFile) -> tuple[int, dict]:
    eq1, eq2 = pb.equation(0), pb.equation(1)
    res = certify_rational(eq1, eq2, pb.seed, start=pb.seed_start, n_max=pb.n_max, d_max=pb.d_max)
    if isinstance(res, CertifyFailure):
        code = EXIT_FAILURE if res.reason == "caps_exhausted" else EXIT_REFUSED
        return code, {"status": "failure", "reason": res.reason, "details": res.details}
    return EXIT_OK, {
        "status": "certified",
        "certificate": {
            "value": format_ratfunc(res.value),
            "numerator": [format_rational(c) for c in res.value.num.coeffs],
            "denominator": [format_rational(c) for c in res.value.den.coeffs],
            "equations": [_equation_doc(eq1), _equation_doc(eq2)],
            "terms_used": res.terms_used,
            "degree_bounds": list(res.degree_bounds),
            "verified": list(res.verified),
            "prefix_matched": res.prefix_matched,
        },
    }


def _build(pb: ProblemFile) -> MahlerSystem:
    eq1, eq2 = pb.equation(0), pb.equation(1)
    n1, n2 = normalize_equation(eq1), normalize_equation(eq2)
    return build_system(n1[0], n2[0], pb.seed, start=pb.seed_start, N=max(pb.terms, 256), d=min(pb.d_max, 32))


def _run_build(pb: ProblemFile) -> tuple[int, dict]:
    system = _build(pb)
    return EXIT_OK, {"status": "ok", "system": _system_doc(system), "consistent": True}


def _run_consistency(pb: ProblemFile) -> tuple[int, dict]:
    if pb.system is not None:
        try:
            A = [[_expr(e, "system.A") for e in row] for row in pb.system["A"]]
            B = [[_expr(e, "system.B") for e in row] for row in pb.system["B"]]
        except (KeyError, TypeError) as exc:
            raise InputError("'system' needs square matrices 'A' and 'B'") from exc
        if pb.q is None:
            raise InputError("field 'q' is required")
        n = len(A)
        if any(len(r) != n for r in A) or len(B) != n or any(len(r) != n for r in B):
            raise InputError("'system' needs square matrices of equal size")
        system = MahlerSystem(pb.p, pb.q, A, B)
    else:
        system = _build(pb)
    ok = check_consistency(system)
    invertible = not mat_det(system.A).is_zero() and not mat_det(system.B).is_zero()
    doc = {"status": "ok" if ok else "failure", "consistent": ok, "invertible": invertible,
           "system": _system_doc(system)}
    return (EXIT_OK if ok else EXIT_FAILURE), doc


def _run_probe(pb: ProblemFile) -> tuple[int, dict]:
    eq = normalize_equation(pb.equation(0))[0]
    f = solve_series(eq, pb.seed, max(pb.terms, 128), pb.seed_start)
    if isinstance(f, Inconsistent):
        return _refused("seed_inconsistent", f"index {f.index}: {f.detail}")
    if isinstance(f, Underdetermined):
        return EXIT_FAILURE, {"status": "failure", "reason": "underdetermined",
                              "details": f"seed needs {f.required} values"}
    doc: dict[str, Any] = {"status": "ok", "radius": _fmt_float(radius_estimate(f))}
    base: Any = f
    if len(pb.equations) > 1 and pb.q is not None:
        cert = certify_rational(pb.equation(0), pb.equation(1), pb.seed, start=pb.seed_start,
                                n_max=pb.n_max, d_max=pb.d_max)
        if not isinstance(cert, CertifyFailure):
            base = cert.value
            doc["certified_value"] = format_ratfunc(cert.value)
    r0 = float(pb.probe.get("r0", choose_r0(eq, base if isinstance(base, RatFunc) else None)))
    j_max = int(pb.probe.get("j_max", 3))
    per = int(pb.probe.get("samples_per_annulus", 32))
    try:
        rep = growth_check(eq, base, r0, j_max, per)
    except (PrecisionError, PoleProximityError) as exc:
        doc["growth"] = None
        doc["growth_error"] = str(exc)
        return EXIT_OK, doc
    doc["growth"] = {
        "r0": r0,
        "K": _fmt_float(rep.K),
        "M": rep.M,
        "L": _fmt_float(rep.L),
        "d": rep.d,
        "all_within_bound": rep.all_within_bound,
        "skipped": rep.skipped,
        "samples": [
            {"log_abs_g": _fmt_float(s.log_abs_g), "log_bound": _fmt_float(s.log_bound)}
            for s in rep.samples
        ],
    }
    return EXIT_OK, doc


_DISPATCH = {
    "solve": _run_solve,
    "certify": _run_certify,
    "build-system": _run_build,
    "check-consistency": _run_consistency,
    "probe": _run_probe,
}


def run(problem: ProblemFile, mode: str | None = None) -> tuple[int, dict]:
    """Dispatch ``problem`` to its mode; returns (exit code, output document)."""
    mode = mode or problem.mode
    if mode not in _DISPATCH:
        raise InputError(f"unknown mode {mode!r}")
    try:
        code, doc = _DISPATCH[mode](problem)
    except SeedInconsistentError as exc:
        code, doc = _refused("seed_inconsistent", str(exc))
    except (PrecisionError, SystemBuildError) as exc:
        code, doc = EXIT_FAILURE, {"status": "failure", "reason": "precision", "details": str(exc)}
    doc["mode"] = mode
    return code, doc


def run_file(path: str, mode: str, terms: int | None = None, max_degree: int | None = None,
             deterministic: bool = False) -> tuple[int, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        problem = parse_problem(data)
        if terms is not None:
            problem.terms = terms
            problem.n_max = terms
        if max_degree is not None:
            problem.d_max = max_degree
        code, doc = run(problem, mode)
    except (OSError, json.JSONDecodeError, InputError) as exc:
        code, doc = EXIT_INPUT, {"status": "error", "reason": "input_error", "details": str(exc), "mode": mode}
    doc["schema"] = SCHEMA_VERSION
    doc["problem"] = str(path)
    doc["exit_code"] = code
    doc["generator"] = f"mahlerkit {__version__}"
    if not deterministic:
        doc["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    return code, doc


def _job(args):
    return run_file(*args)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mahlerkit", description=__doc__.splitlines()[0])
    parser.add_argument("mode", choices=MODES)
    parser.add_argument("problem", nargs="+", help="problem file(s), JSON schema version 1")
    parser.add_argument("--terms", type=int, help="series terms (solve/probe) or N cap (certify)")
    parser.add_argument("--max-degree", type=int, help="degree cap for reconstruction")
    parser.add_argument("--deterministic", action="store_true", help="omit the timestamp field")
    parser.add_argument("--jobs", type=int, default=1, help="process problem files in parallel")
    parser.add_argument("--output", help="write the output document here instead of stdout")
    args = parser.parse_args(argv)

    jobs = [(p, args.mode, args.terms, args.max_degree, args.deterministic) for p in args.problem]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_job, jobs))
    else:
        results = [_job(j) for j in jobs]
    docs = [doc for _, doc in results]
    out = docs[0] if len(docs) == 1 else docs
    text = json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return max(code for code, _ in results)


if __name__ == "__main__":
    sys.exit(main())
