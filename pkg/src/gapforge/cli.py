"""Command line interface.

Subcommands: gaps, semigroup, dominant, verify, bench. Exit codes: 0 on
success, 2 on bad input or refused limits, 3 when a cross-check found a
mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import backend, bench
from .dominant import dominant_differences_bruteforce, dominant_differences_formula
from .errors import InputError, LimitError
from .euclid import build_chain
from .gapset import coefficients_by_quotient, gap_bounds, gapset_formula, gapset_oracle, largest_gaps
from .residue import lnr
from .semigroup import (
    build_tables,
    n_delta_bruteforce,
    n_delta_formula,
    s_delta_bruteforce,
    s_delta_formula,
)
from .verify import DEFAULT_CHECKS, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

# JSON lists longer than this are cut (and flagged) unless --full is given.
TRUNCATE_AT = 10000


def canonical_json(payload) -> str:
    """Canonical rendering: sorted keys, two-space indent, integers only."""
    return json.dumps(payload, sort_keys=True, indent=2)


def _notice(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(canonical_json(payload))
    else:
        for line in lines:
            print(line)


def _swapped(args) -> tuple:
    p, q = args.p, args.q
    if p > q:
        p, q = q, p
        _notice(args, f"note: swapped arguments to p={p} q={q}")
    return p, q


def _cap_override(args, p: int, q: int):
    return (p - 1) * (q - 1) + 1 if getattr(args, "force", False) else None


def _head(values, limit: int = 20) -> str:
    shown = " ".join(str(v) for v in values[:limit])
    return shown + (" ..." if len(values) > limit else "")


def cmd_gaps(args) -> int:
    p, q = _swapped(args)
    partition = gapset_formula(p, q)
    g1, g2 = largest_gaps(p, q)
    lower, upper = gap_bounds(p, q)
    payload = {
        "p": p,
        "q": q,
        "parts": [list(part) for part in partition.parts],
        "flat": list(partition.flat),
        "count": partition.count,
        "g1": g1,
        "g2": g2,
        "bounds": {"lower": lower, "upper": upper},
    }
    lines = [
        f"p={p} q={q} count={partition.count}",
        "flat: " + _head(partition.flat),
    ]
    for i, part in enumerate(partition.parts, start=1):
        lines.append(f"part {i}: " + _head(part))
    lines.append(f"g1={g1} g2={g2}")
    if args.bounds:
        lines.append(f"gap-count bounds: {lower} <= {partition.count} <= {upper}")
    if args.chain:
        chain = build_chain(p, lnr(q, p))
        payload["chain"] = chain.to_dict()
        lines.append(f"chain: r={list(chain.r)} Z={list(chain.Z)} s={list(chain.s)}")
    status = EXIT_OK
    if args.oracle:
        stream = coefficients_by_quotient(p, q, max_coeffs=_cap_override(args, p, q))
        gaps, multiplicities = gapset_oracle(stream)
        payload["oracle"] = {
            "gapset": sorted(gaps),
            "multiplicities": {str(g): multiplicities[g] for g in sorted(multiplicities)},
        }
        if gaps == set(partition.flat):
            lines.append("oracle: agrees")
        else:
            lines.append(f"oracle: MISMATCH formula={list(partition.flat)} oracle={sorted(gaps)}")
            status = EXIT_MISMATCH
    _emit(args, payload, lines)
    return status


def cmd_semigroup(args) -> int:
    p, q = _swapped(args)
    tables = build_tables(p, q, max_coeffs=_cap_override(args, p, q))
    s_formula = s_delta_formula(p, q)
    n_formula = n_delta_formula(p, q)
    ell = [int(x) for x in tables.ell]
    nn = [int(x) for x in tables.nn]
    truncated = False
    if not args.full and len(ell) > TRUNCATE_AT:
        ell = ell[:TRUNCATE_AT]
        truncated = True
    if not args.full and len(nn) > TRUNCATE_AT:
        nn = nn[:TRUNCATE_AT]
        truncated = True
    payload = {
        "p": p,
        "q": q,
        "phi": tables.phi,
        "theta": tables.theta,
        "frobenius": tables.frobenius,
        "ell": ell,
        "nn": nn,
        "s_delta": sorted(s_formula),
        "n_delta": sorted(n_formula),
        "truncated": truncated,
    }
    lines = [
        f"p={p} q={q} phi={tables.phi} theta={tables.theta} frobenius={tables.frobenius}",
        f"ell ({len(tables.ell)}): " + _head(list(tables.ell)),
        f"nn ({len(tables.nn)}): " + _head(list(tables.nn)),
        "s_delta: " + " ".join(str(v) for v in sorted(s_formula)),
        "n_delta: " + " ".join(str(v) for v in sorted(n_formula)),
    ]
    status = EXIT_OK
    if args.oracle:
        s_brute = s_delta_bruteforce(tables)
        n_brute = n_delta_bruteforce(tables)
        if s_brute == s_formula and n_brute == n_formula:
            lines.append("oracle: agrees")
        else:
            lines.append(
                f"oracle: MISMATCH s_delta {sorted(s_brute)} vs {sorted(s_formula)},"
                f" n_delta {sorted(n_brute)} vs {sorted(n_formula)}"
            )
            status = EXIT_MISMATCH
    _emit(args, payload, lines)
    return status


def cmd_dominant(args) -> int:
    formula = dominant_differences_formula(args.p, args.u)
    payload = {
        "p": formula.p,
        "u": formula.u,
        "r1": formula.r1,
        "parts": [list(part) for part in formula.parts],
        "flat": list(formula.flat),
    }
    lines = [
        f"p={formula.p} u={formula.u} r1={formula.r1}",
        "flat: " + _head(formula.flat),
    ]
    for i, part in enumerate(formula.parts, start=1):
        lines.append(f"part {i}: " + _head(part))
    if args.chain:
        chain = build_chain(formula.p, formula.r1)
        payload["chain"] = chain.to_dict()
        lines.append(f"chain: r={list(chain.r)} Z={list(chain.Z)} s={list(chain.s)}")
    status = EXIT_OK
    if args.oracle:
        scanned = dominant_differences_bruteforce(args.p, args.u, force=args.force)
        payload["oracle"] = {"flat": list(scanned)}
        if set(scanned) == set(formula.flat):
            lines.append("oracle: agrees")
        else:
            lines.append(f"oracle: MISMATCH formula={list(formula.flat)} oracle={list(scanned)}")
            status = EXIT_MISMATCH
    _emit(args, payload, lines)
    return status


def cmd_verify(args) -> int:
    checks = [token.strip() for token in args.checks.split(",") if token.strip()]
    report = run_sweep(args.p_max, args.q_max, checks=checks, jobs=args.jobs)
    payload = report.to_dict()
    lines = [
        "checks: " + ", ".join(report.checks),
        f"cells checked: {report.cells_checked}",
        f"mismatches: {len(report.mismatches)}",
        f"elapsed: {report.elapsed_ns} ns",
    ]
    for m in report.mismatches[:50]:
        lines.append(f"  p={m.p} q={m.second} check={m.check} expected={m.expected} actual={m.actual}")
    if len(report.mismatches) > 50:
        lines.append(f"  ... and {len(report.mismatches) - 50} more")
    _emit(args, payload, lines)
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def cmd_bench(args) -> int:
    p, q = _swapped(args)
    formula_ns = bench.time_formula(p, q, args.repetitions)
    payload = {
        "p": p,
        "q": q,
        "repetitions": args.repetitions,
        "backend": backend.active_backend(),
        "formula_ns": formula_ns,
    }
    lines = [
        f"backend: {backend.active_backend()}",
        f"formula: {formula_ns} ns (median of {args.repetitions})",
    ]
    if not args.no_oracle:
        cap = _cap_override(args, p, q)
        if args.compare_backends:
            per_backend = {}
            for name in backend.available_backends():
                with backend.use_backend(name):
                    per_backend[name] = bench.time_oracle(p, q, args.repetitions, max_coeffs=cap)
            payload["backends"] = per_backend
            for name in sorted(per_backend):
                lines.append(f"oracle[{name}]: {per_backend[name]} ns (median of {args.repetitions})")
            oracle_ns = per_backend[backend.active_backend()]
        else:
            oracle_ns = bench.time_oracle(p, q, args.repetitions, max_coeffs=cap)
        payload["oracle_ns"] = oracle_ns
        payload["ratio"] = oracle_ns // max(1, formula_ns)
        lines.append(f"oracle: {oracle_ns} ns (median of {args.repetitions})")
        lines.append(f"ratio: {payload['ratio']}x")
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapforge",
        description="Gap structure of two-generator numerical semigroups and"
        " their inclusion-exclusion polynomials, with brute-force cross-checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON on stdout")
    common.add_argument("--quiet", action="store_true", help="suppress notices on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gaps", parents=[common], help="gap structure of one pair")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check against the coefficient oracle")
    sp.add_argument("--bounds", action="store_true", help="also print the gap-count bounds")
    sp.add_argument("--chain", action="store_true", help="include the Euclidean chain")
    sp.add_argument("--force", action="store_true", help="ignore the oracle size cap")
    sp.set_defaults(handler=cmd_gaps)

    sp = sub.add_parser("semigroup", parents=[common], help="tables and distance sets of one pair")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check distance sets against the tables")
    sp.add_argument("--full", action="store_true", help="never truncate the tables")
    sp.add_argument("--force", action="store_true", help="ignore the table size cap")
    sp.set_defaults(handler=cmd_semigroup)

    sp = sub.add_parser("dominant", parents=[common], help="dominant differences of one permutation")
    sp.add_argument("p", type=int)
    sp.add_argument("u", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check against the window scan")
    sp.add_argument("--chain", action="store_true", help="include the Euclidean chain")
    sp.add_argument("--force", action="store_true", help="scan even above the size guard")
    sp.set_defaults(handler=cmd_dominant)

    sp = sub.add_parser("verify", parents=[common], help="sweep formulas against oracles")
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--q-max", type=int, default=None, help="defaults to --p-max")
    sp.add_argument(
        "--checks",
        default=",".join(DEFAULT_CHECKS),
        help="comma-separated suite names (default: %(default)s; 'all' for everything)",
    )
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("bench", parents=[common], help="time the closed form against the oracle")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("-r", "--repetitions", type=int, default=5)
    sp.add_argument("--no-oracle", action="store_true", help="time the closed form only")
    sp.add_argument("--force", action="store_true", help="ignore the oracle size cap")
    sp.add_argument("--compare-backends", action="store_true", help="time the oracle on every backend")
    sp.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InputError, LimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
