"""Command-line front end.

Subcommands: wallis, integrate, numbers, verify.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 series did not converge.

Defaults can come from a flat ``key = value`` file given by ``--config``
or the WALLIS_SERIES_CONFIG environment variable; keys mirror CliConfig.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .errors import NonConvergenceError, UnknownSeriesError, WallisSeriesError
from .exact_core import wallis_even_ratio, wallis_odd_ratio
from .number_sequences import bernoulli_positive, euler_positive
from .quadrature import DEFAULT_LEVEL_CAP, oracle_integral
from .series_catalog import catalog_lookup, catalog_names
from .summation import DEFAULT_MAX_TERMS
from .transform_engine import integrate
from .verification import run_all

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3

CONFIG_ENV = "WALLIS_SERIES_CONFIG"
NOTES = {"arsinh": "Catalan's constant", "artanh": "twice Catalan's constant",
         "arcsin": "pi^2/8"}


@dataclass(frozen=True)
class CliConfig:
    tolerance: float = 1e-10
    max_terms: int = DEFAULT_MAX_TERMS
    output_format: str = "table"
    quadrature_level_cap: int = DEFAULT_LEVEL_CAP

    def validate(self) -> None:
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.output_format not in ("table", "json"):
            raise ValueError(f"output_format must be table or json, got {self.output_format!r}")
        if self.quadrature_level_cap < 3:
            raise ValueError("quadrature_level_cap must be >= 3")


def load_config(path: str | None) -> CliConfig:
    """Read a key=value config file; blank lines and # comments are skipped."""
    config = CliConfig()
    if not path:
        return config
    types = {f.name: f.type for f in fields(CliConfig)}
    casts = {"float": float, "int": lambda s: int(float(s)), "str": str}
    updates = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in types:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            updates[key] = casts[types[key]](value)
    config = replace(config, **updates)
    config.validate()
    return config


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _shown(x: float, digits: int = 15) -> float | None:
    # JSON carries exactly the digits the table prints; null for inf/nan
    if not math.isfinite(x):
        return None
    return float(f"{x:.{digits}g}")


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit(args, payload: dict, table_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, allow_nan=False))
    else:
        print("\n".join(table_lines))


def cmd_wallis(args, config: CliConfig) -> int:
    if args.n < 0:
        args.parser.error(f"--n must be >= 0, got {args.n}")
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    if args.parity == "odd":
        ratio = wallis_odd_ratio(args.n)
        text = _fraction_text(ratio)
        value = float(ratio)
    else:
        ratio = wallis_even_ratio(args.n)
        text = f"{_fraction_text(ratio)} × π/2"
        value = float(ratio) * math.pi / 2
    payload = {"n": args.n, "parity": args.parity, "ratio": _fraction_text(ratio),
               "factor": "pi/2" if args.parity == "even" else "1", "value": _shown(value)}
    power = 2 * args.n + (1 if args.parity == "odd" else 0)
    _emit(args, payload, [text, f"≈ {_fmt(value)}  (integral of sin^{power} x over [0, π/2])"])
    return EXIT_OK


def cmd_integrate(args, config: CliConfig) -> int:
    try:
        spec = catalog_lookup(args.name)
    except UnknownSeriesError as exc:
        print(f"error: {exc}; known: {', '.join(catalog_names())}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = integrate(spec.stream(), config.tolerance, max_terms=config.max_terms)
    except NonConvergenceError as exc:
        partial = float(exc.partial) if exc.partial is not None else float("nan")
        if spec.parity == "even" and exc.partial is not None:
            partial *= math.pi / 2
        payload = {"name": args.name, "converged": False, "partial_value": _shown(partial),
                   "tail_bound": _shown(exc.tail_bound, 2), "terms_used": exc.terms_used, "error": str(exc)}
        _emit(args, payload, [f"name        {args.name}",
                              f"partial     {_fmt(partial)} ± {exc.tail_bound:.2g}",
                              f"terms       {exc.terms_used}",
                              f"error       {exc}"])
        return EXIT_NONCONVERGENCE
    oracle = oracle_integral(args.name, "sin", max(config.tolerance / 10, 1e-13),
                             level_cap=config.quadrature_level_cap)
    diff = abs(result.value - oracle.value)
    note = NOTES.get(args.name)
    payload = {
        "name": args.name,
        "converged": True,
        "series_value": _shown(result.value),
        "series_tail": _shown(result.tail_bound, 2),
        "terms_used": result.terms_used,
        "strategy": result.strategy_used,
        "oracle_value": _shown(oracle.value),
        "oracle_error": _shown(oracle.error_estimate, 2),
        "abs_diff": _shown(diff, 2),
        "notes": [note] if note else [],
    }
    lines = [
        f"name        {args.name}",
        f"series      {_fmt(result.value)} ± {result.tail_bound:.2g}",
        f"terms       {result.terms_used} ({result.strategy_used})",
        f"oracle      {_fmt(oracle.value)} ± {oracle.error_estimate:.2g}",
        f"difference  {diff:.2g}",
    ]
    if note:
        lines.append(f"note        {note}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_numbers(args, config: CliConfig) -> int:
    if args.count < 1:
        args.parser.error(f"--count must be >= 1, got {args.count}")
    if args.kind == "bernoulli":
        values = [bernoulli_positive(k) for k in range(1, args.count + 1)]
    else:
        values = [Fraction(euler_positive(k)) for k in range(1, args.count + 1)]
    rows = [(k, _fraction_text(v)) for k, v in enumerate(values, 1)]
    width = len(str(args.count))
    payload = {"kind": args.kind, "values": [{"k": k, "value": v} for k, v in rows]}
    _emit(args, payload, [f"{k:>{width}}  {v}" for k, v in rows])
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    report = run_all(config.tolerance, max_terms=config.max_terms,
                     level_cap=config.quadrature_level_cap)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_table())
    return EXIT_OK if report.passed else EXIT_FAILED


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, default=None, help="absolute tolerance")
    parser.add_argument("--max-terms", type=int, default=None, help="term budget per series")
    parser.add_argument("--format", choices=("table", "json"), default=None)
    parser.add_argument("--config", default=None,
                        help=f"key=value config file (default: ${CONFIG_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallis-series",
        description="Integrals of f(sin x) over [0, pi/2] from Maclaurin coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wallis", help="exact Wallis integral of sin^(2n+1) or sin^(2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", choices=("odd", "even"), default="odd")
    _common(p)
    p.set_defaults(func=cmd_wallis, parser=p)

    p = sub.add_parser("integrate", help="transform a catalog series and compare with quadrature")
    p.add_argument("--name", required=True, help="catalog identifier, e.g. sin or artanh")
    _common(p)
    p.set_defaults(func=cmd_integrate, parser=p)

    p = sub.add_parser("numbers", help="positive-convention Bernoulli or Euler numbers")
    p.add_argument("kind", choices=("bernoulli", "euler"))
    p.add_argument("--count", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_numbers, parser=p)

    p = sub.add_parser("verify", help="run the full verification suite")
    _common(p)
    p.set_defaults(func=cmd_verify, parser=p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config or os.environ.get(CONFIG_ENV))
        overrides = {}
        if args.tol is not None:
            overrides["tolerance"] = args.tol
        if args.max_terms is not None:
            overrides["max_terms"] = args.max_terms
        if args.format is not None:
            overrides["output_format"] = args.format
        config = replace(config, **overrides)
        config.validate()
    except (OSError, ValueError) as exc:
        args.parser.error(str(exc))
    args.format = config.output_format
    try:
        return args.func(args, config)
    except WallisSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
