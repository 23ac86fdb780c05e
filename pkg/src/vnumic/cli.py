"""Command-line front end.

Subcommands: info, decompose, ass, closure, vnum, table, verify.  Input is
an ideal file in the text grammar or its JSON twin (see ``fileformat``).
Output is an aligned text report by default or JSON lines with ``--json``;
JSON output is byte-identical for identical (input, seed), so timing is
emitted only on ``--timing`` and all randomness is seed-driven.

Exit codes: 0 success / all assertions pass, 1 verification failure,
2 usage or parse errors.

The oracle budget for ``table`` is given in seconds but applied through a
fixed nominal ops-per-second constant, so which rows get oracle values is
a deterministic function of the input, never of the machine.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import _kernels, verify
from .closure import closure_generators, closure_power
from .decompose import (
    MonomialPrime,
    associated_primes,
    height,
    irreducible_decomposition,
    is_complete_intersection,
)
from .fileformat import IdealDocument, ParseError, parse_ideal_file
from .formulas import NotApplicableError, vnum_gap_table
from .ring import DomainError, MonomialIdeal
from .vnum import v_number

# Nominal desk-scale throughput used to turn --budget seconds into a
# deterministic operation budget for oracle rows.
OPS_PER_SECOND = 2_000_000

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n")


def _load(path: str) -> IdealDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit(f"vnumic: cannot read {path}: {exc.strerror}")
    doc = parse_ideal_file(text)
    for warning in doc.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return doc


def _pick_ideal(doc: IdealDocument, name: str | None) -> tuple[str, MonomialIdeal]:
    if name is None:
        if len(doc.ideals) == 1:
            return next(iter(doc.ideals.items()))
        raise SystemExit(
            f"vnumic: file declares {sorted(doc.ideals)}; pick one with --ideal"
        )
    if name not in doc.ideals:
        raise SystemExit(f"vnumic: no ideal named {name!r} in the input")
    return name, doc.ideals[name]


def _prime_str(prime: MonomialPrime) -> str:
    return ", ".join(prime.ring.vars[i] for i in prime.sorted_vars())


def _working_ideal(args, doc, name, ideal):
    """Apply --power/--closure (or the document directives) to the ideal."""
    power = args.power if args.power is not None else doc.power
    closed = getattr(args, "closure", False) or doc.closure
    label = name
    if closed:
        ideal = closure_power(ideal, power or 1)
        label = f"closure({name}^{power or 1})" if (power or 1) > 1 else f"closure({name})"
    elif power is not None and power != 1:
        ideal = ideal.power(power)
        label = f"{name}^{power}"
    return label, ideal


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_info(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    label, ideal = _working_ideal(args, doc, name, ideal)
    if not ideal.is_proper:
        raise SystemExit(f"vnumic: {label} is not a proper nonzero ideal")
    payload = {
        "command": "info",
        "ideal": label,
        "ring": list(ideal.ring.vars),
        "generators": [str(g) for g in ideal.gens],
        "mu": ideal.mu,
        "alpha": ideal.alpha(),
        "delta": ideal.delta(),
        "height": height(ideal),
        "complete_intersection": is_complete_intersection(ideal),
        "equigenerated": ideal.is_equigenerated(),
        "seed": args.seed,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"ideal {label} in ring {' '.join(ideal.ring.vars)}")
        print(f"  generators: {', '.join(payload['generators'])}")
        for key in ("mu", "alpha", "delta", "height"):
            print(f"  {key}: {payload[key]}")
        print(f"  complete intersection: {'yes' if payload['complete_intersection'] else 'no'}")
        print(f"  equigenerated: {'yes' if payload['equigenerated'] else 'no'}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    label, ideal = _working_ideal(args, doc, name, ideal)
    decomp = irreducible_decomposition(ideal)
    comps = [
        {ideal.ring.vars[i]: e for i, e in c.powers} for c in decomp.components
    ]
    if args.json:
        _emit_json(
            {
                "command": "decompose",
                "ideal": label,
                "components": comps,
                "seed": args.seed,
            }
        )
    else:
        print(f"irreducible decomposition of {label}: {len(comps)} components")
        for c in decomp.components:
            print(f"  {c}")
    return EXIT_OK


def cmd_ass(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    label, ideal = _working_ideal(args, doc, name, ideal)
    primes = sorted(associated_primes(ideal), key=MonomialPrime.sort_key)
    if args.json:
        _emit_json(
            {
                "command": "ass",
                "ideal": label,
                "primes": [[ideal.ring.vars[i] for i in p.sorted_vars()] for p in primes],
                "seed": args.seed,
            }
        )
    else:
        print(f"associated primes of {label}: {len(primes)}")
        for p in primes:
            print(f"  <{_prime_str(p)}>")
    return EXIT_OK


def cmd_closure(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    n = args.power if args.power is not None else (doc.power or 1)
    closed = closure_power(ideal, n)
    label = f"closure({name}^{n})" if n > 1 else f"closure({name})"
    if args.json:
        _emit_json(
            {
                "command": "closure",
                "ideal": label,
                "generators": [str(g) for g in closed.gens],
                "seed": args.seed,
            }
        )
    else:
        print(f"{label}: {closed.mu} minimal generators")
        print("  " + ", ".join(str(g) for g in closed.gens))
    return EXIT_OK


def cmd_vnum(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    label, ideal = _working_ideal(args, doc, name, ideal)
    report = v_number(ideal)
    locals_payload = [
        {
            "prime": [ideal.ring.vars[i] for i in p.sorted_vars()],
            "value": value,
            "witness": str(witness.monomial),
        }
        for p, (value, witness) in sorted(
            report.locals.items(), key=lambda kv: kv[0].sort_key()
        )
    ]
    if args.json:
        _emit_json(
            {
                "command": "vnum",
                "ideal": label,
                "v": report.v,
                "prime": [ideal.ring.vars[i] for i in report.prime.sorted_vars()],
                "witness": str(report.witness.monomial),
                "locals": locals_payload,
                "seed": args.seed,
            }
        )
    else:
        print(f"v({label}) = {report.v}")
        print(f"  attained at <{_prime_str(report.prime)}> with witness {report.witness.monomial}")
        print("  local v-numbers:")
        for entry in locals_payload:
            print(
                f"    <{', '.join(entry['prime'])}>: {entry['value']}"
                f"  (witness {entry['witness']})"
            )
    return EXIT_OK


def cmd_table(args) -> int:
    doc = _load(args.file)
    name, ideal = _pick_ideal(doc, args.ideal)
    if args.budget == 0:
        budget_ops, oracle = None, False
    elif args.budget < 0:
        budget_ops, oracle = None, True
    else:
        budget_ops, oracle = args.budget * OPS_PER_SECOND, True
    rows = vnum_gap_table(ideal, args.nmax, budget_ops=budget_ops, oracle=oracle)
    if args.json:
        for row in rows:
            _emit_json(
                {
                    "command": "table",
                    "ideal": name,
                    "n": row.n,
                    "v_power": row.v_power,
                    "v_closure": row.v_closure,
                    "gap": row.gap,
                    "closure_formula": row.closure_formula,
                    "closure_formula_name": row.closure_formula_name,
                    "closure_oracle": row.closure_oracle,
                    "match": row.match,
                    "skipped": row.skipped,
                    "seed": args.seed,
                }
            )
    else:
        print(f"v-number table for {name} (nmax={args.nmax})")
        header = f"{'n':>3}  {'v(I^n)':>7}  {'v(cl I^n)':>9}  {'gap':>4}  {'source':<22}  match"
        print(header)
        for row in rows:
            if row.skipped:
                print(f"{row.n:>3}  {row.v_power:>7}  {'skipped':>9}  {'-':>4}  {'-':<22}  -")
                continue
            match = "-" if row.match is None else ("yes" if row.match else "NO")
            print(
                f"{row.n:>3}  {row.v_power:>7}  {row.v_closure:>9}  {row.gap:>4}  "
                f"{row.closure_source:<22}  {match}"
            )
    mismatches = [row for row in rows if row.match is False]
    return EXIT_FAILED if mismatches else EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.AVAILABLE) if args.suite == "all" else [args.suite]
    overall_ok = True
    for name in names:
        start = time.perf_counter()
        report = verify.run_suite(
            name,
            trials=args.trials,
            seed=args.seed,
            max_exp=args.max_exp,
        )
        elapsed = time.perf_counter() - start
        overall_ok &= report.passed
        if args.json:
            payload = {
                "command": "verify",
                "suite": name,
                "cases": report.cases,
                "failures": report.failures,
                "passed": report.passed,
                "seed": args.seed,
            }
            if args.timing:
                payload["elapsed_s"] = round(elapsed, 3)
            _emit_json(payload)
        else:
            status = "PASS" if report.passed else "FAIL"
            print(f"suite {name}: {status} ({report.cases} checks)")
            for failure in report.failures:
                print(f"  FAIL: {failure}")
            print(f"  [{elapsed:.2f}s]", file=sys.stderr)
    return EXIT_OK if overall_ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, power: bool = False, closure: bool = False):
    p.add_argument("file", help="ideal file (text grammar or JSON)")
    p.add_argument("--ideal", help="ideal name when the file declares several")
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    p.add_argument("--seed", type=int, default=0, help="seed echoed into reports")
    p.add_argument("--timing", action="store_true", help="include timing in JSON output")
    if power:
        p.add_argument("--power", type=int, default=None, help="work with I^n")
    if closure:
        p.add_argument(
            "--closure", action="store_true", help="work with the integral closure"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnumic",
        description="Exact v-numbers and integral closures of monomial ideals "
        f"(kernel backend: {_kernels.BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="alpha, delta, height, CI and equigenerated flags")
    _add_common(p, power=True, closure=True)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("decompose", help="irredundant irreducible decomposition")
    _add_common(p, power=True, closure=True)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("ass", help="associated primes")
    _add_common(p, power=True, closure=True)
    p.set_defaults(fn=cmd_ass)

    p = sub.add_parser("closure", help="generators of the closure of I^n")
    _add_common(p, power=True)
    p.set_defaults(fn=cmd_closure)

    p = sub.add_parser("vnum", help="v-number report (all local values + witnesses)")
    _add_common(p, power=True, closure=True)
    p.set_defaults(fn=cmd_vnum)

    p = sub.add_parser("table", help="v(I^n) vs v(closure(I^n)) table")
    _add_common(p)
    p.add_argument("--nmax", type=int, required=True, help="table rows n = 1..nmax")
    p.add_argument(
        "--budget",
        type=int,
        default=int(os.environ.get("VNUMIC_BUDGET", "60")),
        help="oracle budget in nominal seconds per row; 0 disables the "
        "oracle, negative means unlimited (default: $VNUMIC_BUDGET or 60)",
    )
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument(
        "suite",
        choices=list(verify.AVAILABLE) + ["all"],
        help="suite name, or `all`",
    )
    p.add_argument("--trials", type=int, default=None, help="randomized trial count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-exp", dest="max_exp", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"vnumic: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, NotApplicableError, ValueError) as exc:
        print(f"vnumic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        raise
    except AssertionError as exc:
        print(f"vnumic: internal consistency check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
