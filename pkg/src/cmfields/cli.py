"""Command-line front end.

Subcommands:
    unit-index --field <spec> [--override {1,2}]        JSON verdict
    hminus --field <spec> [--q-override] [--json|--csv] minus class number
    table {hminus,unitindex} ...                        batch tables
    verify {masley,metsankyla,v4,counterexample,martinet} ...

All behavior is flag-driven (no environment variables); identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import CMFieldsError
from .fieldspec import parse_field_spec
from .fields import DEFAULT_MAX_DEGREE, cyclotomic_field
from .hminus import minus_class_number
from .theorems import (
    check_counterexample,
    check_masley,
    check_metsankyla,
    check_v4,
    sweep_counterexample_family1,
    sweep_masley,
    sweep_metsankyla,
    sweep_v4,
)
from .unitindex import hasse_unit_index, martinet_pair

CSV_COLUMNS = ["field", "conductor", "degree", "w", "Q", "rule", "h_minus"]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CMFieldsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmfields",
        description="Exact minus class numbers and unit indices of abelian CM-fields",
    )
    parser.add_argument(
        "--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
        help="abort cleanly when a field would exceed this degree",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("unit-index", help="Hasse unit index of a field")
    p.add_argument("--field", required=True)
    p.add_argument("--override", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_unit_index)

    p = sub.add_parser("hminus", help="minus class number of a field")
    p.add_argument("--field", required=True)
    p.add_argument("--q-override", type=int, choices=(1, 2))
    _add_format_flags(p)
    p.set_defaults(func=cmd_hminus)

    p = sub.add_parser("table", help="batch tables over several fields")
    p.add_argument("kind", choices=("hminus", "unitindex"))
    p.add_argument("--spec", action="append", default=[])
    p.add_argument("--zeta-range", help="A..B, all moduli != 2 mod 4 in range")
    p.add_argument("--q-override", type=int, choices=(1, 2))
    p.add_argument("--strict", action="store_true",
                   help="nonzero exit when any row errors")
    p.add_argument("--threads", type=int, default=1,
                   help="parallel sweep width; output order is unaffected")
    _add_format_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification check or sweep")
    p.add_argument("check", choices=("masley", "metsankyla", "v4",
                                     "counterexample", "martinet"))
    p.add_argument("params", nargs="*", type=int,
                   help="check parameters, e.g. 'v4 -4 -20'")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max", type=int, help="sweep bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def _add_format_flags(p):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _hminus_row(spec_text: str, max_degree: int, q_override=None) -> dict:
    field = parse_field_spec(spec_text).build(max_degree=max_degree)
    report = minus_class_number(field, q_override=q_override)
    return {
        "field": spec_text,
        "conductor": field.conductor,
        "degree": field.degree,
        "w": report.w,
        "Q": report.q,
        "rule": report.rule,
        "h_minus": report.h_minus,
        "factors": [
            {"rep": rep, "norm_num": norm.numerator, "norm_den": norm.denominator}
            for rep, norm in report.orbit_factors
        ],
    }


def _unitindex_row(spec_text: str, max_degree: int, override=None) -> dict:
    field = parse_field_spec(spec_text).build(max_degree=max_degree)
    verdict = hasse_unit_index(field, override=override)
    return {
        "field": spec_text,
        "conductor": field.conductor,
        "degree": field.degree,
        "Q": verdict.q,
        "kappa": verdict.kappa_order,
        "rule": verdict.rule,
    }


def cmd_unit_index(args) -> int:
    row = _unitindex_row(args.field, args.max_degree, args.override)
    print(json.dumps({"Q": row["Q"], "kappa": row["kappa"], "rule": row["rule"]}))
    return 0


def cmd_hminus(args) -> int:
    row = _hminus_row(args.field, args.max_degree, args.q_override)
    if args.json:
        print(json.dumps(_jsonable(row)))
    elif args.csv:
        _print_csv([row])
    else:
        for key in CSV_COLUMNS:
            print(f"{key:>10}: {row[key]}")
    return 0


def _print_csv(rows) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _table_specs(args) -> list[str]:
    specs = list(args.spec)
    if args.zeta_range:
        lo, _, hi = args.zeta_range.partition("..")
        for m in range(int(lo), int(hi) + 1):
            if m % 4 != 2:
                specs.append(f"zeta:{m}")
    return specs


def cmd_table(args) -> int:
    specs = _table_specs(args)
    if args.kind == "hminus":
        worker = lambda s: _hminus_row(s, args.max_degree, args.q_override)
    else:
        worker = lambda s: _unitindex_row(s, args.max_degree, args.q_override)

    rows = []
    errors = 0
    results: dict[str, dict] = {}
    if args.threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            futures = {s: pool.submit(worker, s) for s in specs}
        for s, fut in futures.items():
            try:
                results[s] = fut.result()
            except CMFieldsError as exc:
                results[s] = {"field": s, "error": str(exc)}
    else:
        for s in specs:
            try:
                results[s] = worker(s)
            except CMFieldsError as exc:
                results[s] = {"field": s, "error": str(exc)}
    for s in specs:
        row = results[s]
        if "error" in row:
            errors += 1
        rows.append(row)

    if args.json:
        print(json.dumps(_jsonable(rows)))
    elif args.csv:
        _print_csv(rows)
    else:
        columns = CSV_COLUMNS if args.kind == "hminus" else [
            "field", "conductor", "degree", "Q", "kappa", "rule"]
        widths = {c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows])
                  for c in columns}
        print("  ".join(c.ljust(widths[c]) for c in columns))
        for row in rows:
            if "error" in row:
                print(f"{row['field']}  ERROR: {row['error']}")
            else:
                print("  ".join(str(row.get(c, "")).ljust(widths[c])
                                for c in columns))
    return 1 if errors and args.strict else 0


def cmd_verify(args) -> int:
    reports = []
    check = args.check
    if check == "martinet":
        bound = args.max or 200
        primes = [p for p in (args.params or range(2, bound + 1))]
        out = []
        for p in primes:
            if p % 8 != 1:
                continue
            from .arith import is_prime

            if not is_prime(p):
                continue
            rep = martinet_pair(p)
            out.append(rep)
            status = "skip (norm -1)" if rep.unit_norm == -1 else "pass"
            print(f"[{status}] martinet p={rep.p} norm={rep.unit_norm} "
                  f"Q_K={rep.q_biquadratic} Q_L={rep.q_octic}")
        if args.json:
            print(json.dumps([rep.__dict__ for rep in out]))
        return 0

    if args.sweep:
        if check == "masley":
            reports = sweep_masley(args.max or 60)
        elif check == "v4":
            reports = sweep_v4(args.max or 2000)
        elif check == "metsankyla":
            reports = sweep_metsankyla(args.max or 32)
        elif check == "counterexample":
            reports = sweep_counterexample_family1(args.max or 200)
    else:
        if check == "masley":
            m, n = args.params
            reports = [check_masley(m, n)]
        elif check == "v4":
            d1, d2 = args.params
            reports = [check_v4(d1, d2)]
        elif check == "metsankyla":
            m1, m2 = args.params
            reports = [check_metsankyla(cyclotomic_field(m1), cyclotomic_field(m2))]
        elif check == "counterexample":
            family, *rest = args.params
            if family == 1:
                reports = [check_counterexample(1, d1=rest[0], d2=rest[1])]
            else:
                reports = [check_counterexample(2, m=rest[0])]

    failed = 0
    for rep in reports:
        print(rep.summary())
        if not rep.verdict and not rep.vacuous:
            failed += 1
    if args.json:
        print(json.dumps([_jsonable({
            "name": r.name, "inputs": r.inputs, "quantities": r.quantities,
            "verdict": r.verdict, "vacuous": r.vacuous,
        }) for r in reports]))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
