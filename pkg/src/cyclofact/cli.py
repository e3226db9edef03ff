"""Command-line front end: subcommand routing, JSON/CSV emission, budgets.

Exit codes: 0 success, 1 domain or usage error (machine-readable JSON on
stderr), 2 budget exhaustion.  Every exact rational crosses the boundary as
a "num/den" string -- never a float -- and polynomials as [degree, coeff]
pair lists sorted by degree, so emitted documents re-parse losslessly.
Identical invocations produce byte-identical output regardless of the
worker-thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, TextIO

from .elasticity import (
    DEFAULT_SCAN_CAP,
    ElasticityTarget,
    ScanCapExceeded,
    construct_elasticity,
    elasticity_scan,
)
from .minimal_pair import minimal_pair, minimal_pair_of_rational
from .omega import (
    IntervalMonoid,
    omega_interval_atom,
    omega_lower_bound,
    witness_checks,
)
from .polynomials import NatPoly, ZeroPolynomialError, parse_polynomial
from .rationals import format_rat, parse_rat
from .semiring import (
    DEFAULT_ORACLE_CAP,
    NotInMonoidError,
    OracleBudgetExceeded,
    RationalBase,
    down_normal_form,
    enumerate_factorizations,
    length_stats,
    member_witness,
)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_BUDGET = 2

ORACLE_CAP_ENV = "CYCLOFACT_ORACLE_CAP"

SUBCOMMANDS = (
    "minimal-pair",
    "member",
    "factorize",
    "lengths",
    "elasticity-scan",
    "construct-elasticity",
    "omega-interval",
    "antiprime",
)


@dataclass
class RunConfig:
    """Validated invocation: subcommand, base, budgets and output routing."""

    subcommand: str
    q: Optional[Fraction] = None
    oracle_cap: int = DEFAULT_ORACLE_CAP
    scan_cap: int = DEFAULT_SCAN_CAP
    output: str = "json"
    out_path: Optional[str] = None
    threads: int = 1


class CliError(Exception):
    """Usage or domain error; reported as JSON with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _default_oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise CliError(f"{ORACLE_CAP_ENV} must be positive, got {raw!r}")
    return cap


def build_parser() -> _Parser:
    parser = _Parser(prog="cyclofact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("minimal-pair", help="minimal pair of a monic polynomial or a rational")
    p.add_argument("polynomial", nargs="?", help='polynomial string, e.g. "X^2 - 3X + 1"')
    p.add_argument("--rational", type=_rational, help="positive rational, e.g. 3/2")

    for name in ("member", "factorize", "lengths"):
        p = sub.add_parser(name)
        p.add_argument("--q", type=_rational, required=True, help="base q = a/b")
        p.add_argument("--value", type=_rational, required=True, help="element value")
        if name != "member":
            p.add_argument("--enumerate", action="store_true", help="run the exhaustive oracle")
        p.add_argument("--oracle-cap", type=_positive_int, help="enumeration state budget")

    p = sub.add_parser("construct-elasticity")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--target", type=_rational, required=True, help="target ratio s/t >= 1")
    p.add_argument("--scan-cap", type=_positive_int, default=DEFAULT_SCAN_CAP)

    p = sub.add_parser("elasticity-scan")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--bound", type=_rational, required=True, help="enumerate elements up to this value")
    p.add_argument("--out", help="CSV output path (stdout when omitted)")
    p.add_argument("--oracle-cap", type=_positive_int, help="element discovery budget")
    p.add_argument("--threads", type=_positive_int, default=1)

    p = sub.add_parser("omega-interval")
    p.add_argument("--q", type=_rational, required=True, help="rational in (1, 2)")
    p.add_argument("--atom", type=_rational, required=True, help="atom in [1, q]")

    p = sub.add_parser("antiprime")
    p.add_argument("--q", type=_rational, required=True, help="rational in (0, 1)")
    p.add_argument("--k", type=_nonneg_int, required=True, help="atom power")
    p.add_argument("--K", type=_positive_int, required=True, help="lower bound to beat")
    return parser


def _base_for(q: Fraction, flag: str = "--q") -> RationalBase:
    if q <= 1:
        raise CliError(f"{flag}: factorization commands require q > 1, got {format_rat(q)}")
    return RationalBase.from_rational(q)


def _poly_pairs(p: NatPoly) -> list[list[int]]:
    return p.to_pairs()


def _cmd_minimal_pair(args) -> dict:
    if (args.polynomial is None) == (args.rational is None):
        raise CliError("minimal-pair: provide exactly one of a polynomial string or --rational")
    if args.rational is not None:
        if args.rational <= 0:
            raise CliError(f"--rational: expected a positive rational, got {format_rat(args.rational)}")
        pair = minimal_pair_of_rational(args.rational)
    else:
        pair = minimal_pair(parse_polynomial(args.polynomial))
    return {"ell": pair.ell, "p": _poly_pairs(pair.p), "q0": _poly_pairs(pair.q0)}


def _cmd_member(args, config: RunConfig) -> dict:
    base = _base_for(args.q)
    if args.value < 0:
        raise CliError(f"--value: monoid elements are nonnegative, got {format_rat(args.value)}")
    witness = member_witness(base, args.value)
    return {
        "q": str(base),
        "value": format_rat(args.value),
        "member": witness is not None,
        "witness": _poly_pairs(witness) if witness is not None else None,
    }


def _cmd_factorize(args, config: RunConfig) -> dict:
    base = _base_for(args.q)
    witness = member_witness(base, args.value)
    if witness is None:
        raise NotInMonoidError(
            f"--value: {format_rat(args.value)} is not an element of the monoid at q={base}"
        )
    doc = {
        "q": str(base),
        "value": format_rat(args.value),
        "min_factorization": _poly_pairs(witness),
        "max_factorization": _poly_pairs(down_normal_form(base, witness)),
    }
    if args.enumerate:
        all_z = enumerate_factorizations(base, args.value, config.oracle_cap)
        doc["factorizations"] = sorted(_poly_pairs(z) for z in all_z)
    return doc


def _cmd_lengths(args, config: RunConfig) -> dict:
    base = _base_for(args.q)
    stats = length_stats(base, args.value, want_full_set=args.enumerate, cap=config.oracle_cap)
    doc = {
        "q": str(base),
        "value": format_rat(args.value),
        "min_length": stats.min_len,
        "max_length": stats.max_len,
        "elasticity": format_rat(stats.elasticity),
    }
    if stats.length_set is not None:
        doc["length_set"] = list(stats.length_set)
    if not base.is_integer:
        witness = member_witness(base, args.value)
        doc["min_factorization"] = _poly_pairs(witness)
    else:
        doc["min_factorization"] = [[0, args.value.numerator]]
    return doc


def _cmd_construct_elasticity(args, config: RunConfig) -> dict:
    base = _base_for(args.q)
    if args.target < 1:
        raise CliError(f"--target: elasticities are >= 1, got {format_rat(args.target)}")
    target = ElasticityTarget.from_rational(args.target)
    cert = construct_elasticity(base, target, scan_cap=config.scan_cap)
    return {
        "q": str(base),
        "target": f"{target.s}/{target.t}",
        "element": format_rat(cert.element),
        "presentation": _poly_pairs(cert.presentation),
        "min_length": cert.min_len,
        "max_length": cert.max_len,
        "achieved": format_rat(cert.achieved),
        "construction_log": list(cert.construction_log),
    }


def _write_scan_csv(scan, stream: TextIO) -> None:
    stream.write("value_num,value_den,min_len,max_len,elasticity\n")
    for row in scan.rows:
        stream.write(
            f"{row.value.numerator},{row.value.denominator},"
            f"{row.min_len},{row.max_len},{format_rat(row.elasticity)}\n"
        )
    status = "complete" if scan.complete else "partial"
    stream.write(f"# manifest: {status} rows={len(scan.rows)}\n")


def _cmd_elasticity_scan(args, config: RunConfig) -> None:
    base = _base_for(args.q)
    if args.bound < 0:
        raise CliError(f"--bound: expected a nonnegative rational, got {format_rat(args.bound)}")
    scan = elasticity_scan(base, args.bound, budget=config.oracle_cap, threads=config.threads)
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            _write_scan_csv(scan, handle)
    else:
        _write_scan_csv(scan, sys.stdout)


def _cmd_omega_interval(args) -> dict:
    if not Fraction(1) < args.q < Fraction(2):
        raise CliError(f"--q: omega-interval requires 1 < q < 2, got {format_rat(args.q)}")
    monoid = IntervalMonoid.for_ratio(args.q)
    if not Fraction(1) <= args.atom <= monoid.q:
        raise CliError(f"--atom: expected an atom in [1, {format_rat(monoid.q)}], got {format_rat(args.atom)}")
    result = omega_interval_atom(monoid, args.atom)
    return {
        "q": format_rat(monoid.q),
        "atom": format_rat(result.atom),
        "omega": result.omega,
        "conductor": result.conductor,
        "witness": format_rat(result.lower_witness),
        "checks": {
            "blocked_value": format_rat(result.lower_blocked),
            "blocked_outside_monoid": True,
            "divisible_value": format_rat(result.lower_divisible),
            "divisible_inside_monoid": True,
        },
    }


def _cmd_antiprime(args) -> dict:
    if not Fraction(0) < args.q < Fraction(1):
        raise CliError(f"--q: antiprime requires 0 < q < 1, got {format_rat(args.q)}")
    witness = omega_lower_bound(args.q, args.k, args.K)
    checks = witness_checks(witness, args.q)
    return {
        "q": format_rat(args.q),
        "k": witness.atom_power,
        "K": witness.K,
        "N": witness.N,
        "x": format_rat(witness.x),
        "presentation": _poly_pairs(witness.x_presentation),
        "certificate": {
            "dividend": format_rat(witness.certificate.dividend),
            "divisor": format_rat(witness.certificate.divisor),
            "quotient": _poly_pairs(witness.certificate.quotient_presentation),
        },
        "checks": {name: ("pass" if ok else "fail") for name, ok in checks.items()},
    }


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")


def run(config: RunConfig, args) -> Optional[dict]:
    """Dispatch one parsed invocation to its library operation."""
    if config.subcommand == "minimal-pair":
        return _cmd_minimal_pair(args)
    if config.subcommand == "member":
        return _cmd_member(args, config)
    if config.subcommand == "factorize":
        return _cmd_factorize(args, config)
    if config.subcommand == "lengths":
        return _cmd_lengths(args, config)
    if config.subcommand == "construct-elasticity":
        return _cmd_construct_elasticity(args, config)
    if config.subcommand == "elasticity-scan":
        _cmd_elasticity_scan(args, config)
        return None
    if config.subcommand == "omega-interval":
        return _cmd_omega_interval(args)
    if config.subcommand == "antiprime":
        return _cmd_antiprime(args)
    raise CliError(f"unknown subcommand {config.subcommand!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig(
            subcommand=args.subcommand,
            q=getattr(args, "q", None),
            oracle_cap=getattr(args, "oracle_cap", None) or _default_oracle_cap(),
            scan_cap=getattr(args, "scan_cap", DEFAULT_SCAN_CAP),
            out_path=getattr(args, "out", None),
            threads=getattr(args, "threads", 1),
        )
        doc = run(config, args)
    except (OracleBudgetExceeded, ScanCapExceeded) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_BUDGET
    except (CliError, NotInMonoidError, ZeroPolynomialError, ValueError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_DOMAIN_ERROR
    if doc is not None:
        sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
