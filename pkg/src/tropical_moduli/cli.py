"""Command-line front end: enumerate | euler | homology | table | verify.

Exit codes: 0 success, 2 validation error, 3 verification mismatch.
Output is deterministic for a fixed configuration (including worker count):
JSON is emitted with sorted keys and no volatile fields.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from .chains import build_chain_complex, euler_from_cells
from .enumeration import BudgetExceeded, enumerate_all
from .formulas import (
    DEFAULT_CELL_BUDGET,
    HEAVY_LIGHT_TABLE,
    MissingTopWeightEntry,
    build_top_weight_table,
    euler_from_top_weight,
    euler_heavy_light,
    grothendieck_decomposition,
    heavy_light_weights,
    parse_weight_spec,
)
from .graphs import WeightVector, canonicalize, check_moduli_condition
from .homology import betti_numbers

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3

BUDGET_ENV_VAR = "TROPMOD_BUDGET"


class ValidationError(Exception):
    pass


def _budget_from(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CELL_BUDGET


def _weights_from(args) -> tuple[WeightVector, dict]:
    meta = {}
    if getattr(args, "heavy_light", False):
        if args.n is None or args.m is None:
            raise ValidationError("--heavy-light requires --n and --m")
        w = heavy_light_weights(args.n, args.m)
        meta = {"preset": "heavy-light", "n": args.n, "m": args.m,
                "eps": f"1/{args.m + 1}"}
    elif args.w is not None:
        w = parse_weight_spec(args.w)
    else:
        raise ValidationError("provide --w or --heavy-light with --n/--m")
    return w, meta


def _w_strings(w: WeightVector) -> list[str]:
    return [f"{x.numerator}/{x.denominator}" for x in w]


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=sorted(rows[0]))
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


# -- subcommands -----------------------------------------------------------


def cmd_enumerate(args) -> int:
    w, meta = _weights_from(args)
    check_moduli_condition(args.g, w)
    strata = enumerate_all(args.g, w, budget=_budget_from(args), workers=args.workers)
    records = []
    for ne in sorted(strata):
        for cell in strata[ne]:
            rec = cell.graph.to_json_dict()
            rec["edge_count"] = ne
            rec["aut_order"] = cell.form.aut_order
            rec["edge_sign_degenerate"] = cell.form.edge_sign_degenerate
            records.append(rec)
    if args.format == "json":
        _emit_json({"g": args.g, "w": _w_strings(w), "meta": meta,
                    "classes": records,
                    "stratum_sizes": {str(k): len(v) for k, v in strata.items()}})
    elif args.format == "csv":
        rows = [
            {
                "edge_count": r["edge_count"],
                "genus": r["genus"],
                "vertices": len(r["vertices"]),
                "weights": " ".join(str(v["weight"]) for v in r["vertices"]),
                "edges": " ".join(f"{u}-{v}" for u, v in r["edges"]),
                "markings": " ".join(map(str, r["markings"])),
                "aut_order": r["aut_order"],
                "edge_sign_degenerate": r["edge_sign_degenerate"],
            }
            for r in records
        ]
        _emit_csv(rows)
    else:
        for ne in sorted(strata):
            print(f"edge count {ne}: {len(strata[ne])} classes")
            for cell in strata[ne]:
                g = cell.graph
                print(
                    f"  weights={g.weights} edges={g.edges} markings={g.markings}"
                    f" aut={cell.form.aut_order}"
                    f"{' degenerate' if cell.degenerate else ''}"
                )
    return EXIT_OK


def cmd_euler(args) -> int:
    w, meta = _weights_from(args)
    check_moduli_condition(args.g, w)
    budget = _budget_from(args)
    report: dict = {"g": args.g, "w": _w_strings(w), "meta": meta,
                    "method": args.method}
    direct = formula = None
    if args.method in ("direct", "both"):
        cc = build_chain_complex(args.g, w, "all", budget=budget, workers=args.workers)
        direct = euler_from_cells(cc)
        report["direct"] = direct
    if args.method in ("formula", "both"):
        rs = [r for r, _n in grothendieck_decomposition(args.g, w)]
        table = build_top_weight_table(args.g, rs, budget=budget, workers=args.workers)
        missing = [r for r in rs if r not in table.values]
        if missing:
            raise ValidationError(
                f"top-weight Euler characteristic unavailable for r in {missing}"
            )
        formula = euler_from_top_weight(args.g, w, table)
        report["formula"] = formula
        report["provenance"] = table.provenance
    if args.method == "both":
        report["agreement"] = direct == formula
    if args.format == "json":
        _emit_json(report)
    elif args.format == "csv":
        _emit_csv([{k: json.dumps(v) if isinstance(v, (dict, list)) else v
                    for k, v in report.items()}])
    else:
        for k in sorted(report):
            print(f"{k}: {report[k]}")
    if args.method == "both" and direct != formula:
        print(f"MISMATCH: direct {direct} != formula {formula}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_homology(args) -> int:
    w, meta = _weights_from(args)
    check_moduli_condition(args.g, w)
    cc = build_chain_complex(
        args.g, w, args.filter, budget=_budget_from(args), workers=args.workers
    )
    profile = betti_numbers(cc)
    if args.format == "json":
        out = profile.to_json_dict()
        out["meta"] = meta
        _emit_json(out)
    elif args.format == "csv":
        _emit_csv([
            {"degree": k, "betti": b, "reduced_betti": rb}
            for k, (b, rb) in enumerate(zip(profile.betti, profile.reduced_betti))
        ])
    else:
        sys.stdout.write(profile.to_table())
    return EXIT_OK


TABLE_ROWS = {0: range(2, 6), 1: range(2, 6), 2: range(3, 7), 3: range(4, 8)}
TABLE_COLS = range(1, 5)


def cmd_table(args) -> int:
    grid = {}
    mismatches = []
    for g, ns in TABLE_ROWS.items():
        for n in ns:
            for m in TABLE_COLS:
                if n <= g:
                    grid[(g, n, m)] = None
                    continue
                value = euler_heavy_light(g, n, m)
                golden = HEAVY_LIGHT_TABLE.get((g, n, m))
                if golden is None:
                    # empty-space cell; keep the dash
                    grid[(g, n, m)] = None
                    continue
                grid[(g, n, m)] = value
                if args.check and value != golden:
                    mismatches.append(((g, n, m), value, golden))
    if args.format == "json":
        out = {
            f"g={g},n={n},m={m}": ("-" if v is None else v)
            for (g, n, m), v in grid.items()
        }
        payload = {"table": out, "checked": bool(args.check),
                   "mismatches": [list(map(str, t)) for t in mismatches]}
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv([
            {"g": g, "n": n, "m": m, "euler": "-" if v is None else v}
            for (g, n, m), v in sorted(grid.items())
        ])
    else:
        for g, ns in TABLE_ROWS.items():
            print(f"g = {g}")
            header = "n\\m " + " ".join(f"{m:>8}" for m in TABLE_COLS)
            print(header)
            for n in ns:
                cells = [
                    "-" if grid[(g, n, m)] is None else str(grid[(g, n, m)])
                    for m in TABLE_COLS
                ]
                print(f"{n:>3} " + " ".join(f"{c:>8}" for c in cells))
    if mismatches:
        for key, got, want in mismatches:
            print(f"MISMATCH at {key}: computed {got}, golden {want}",
                  file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


DEFAULT_VERIFY_MATRIX = [
    (0, "1^4"),
    (1, "eps^3"),
    (1, "1"),
    (1, "1,1"),
    (1, "1,1,eps"),
    (1, "1/2^3"),
    (2, "1"),
    (2, "1,eps"),
]


def cmd_verify(args) -> int:
    budget = _budget_from(args)
    rng = random.Random(args.seed)
    checks: list[dict] = []

    def record(g, wspec, name, ok, detail=""):
        checks.append({"g": g, "w": wspec, "check": name,
                       "pass": bool(ok), "detail": detail})

    matrix = DEFAULT_VERIFY_MATRIX
    if args.g_max is not None:
        matrix = [(g, s) for g, s in matrix if g <= args.g_max]
    for g, wspec in matrix:
        w = parse_weight_spec(wspec)
        strata = enumerate_all(g, w, budget=budget, workers=args.workers)

        # boundary composition is zero (raises on failure inside the builder)
        try:
            cc = build_chain_complex(
                g, w, "all", strata=strata, _sign_flip=args.inject_sign_flip
            )
            if args.inject_sign_flip:
                cc.verify_d_squared()
            record(g, wspec, "d_squared_zero", True)
        except AssertionError as exc:
            record(g, wspec, "d_squared_zero", False, str(exc))
            continue

        # contraction closure of the enumerated strata
        ok = True
        for ne in sorted(strata):
            if ne == 1:
                continue
            lower = {c.form.encoding for c in strata[ne - 1]}
            for cell in strata[ne]:
                for e in range(cell.graph.num_edges):
                    if canonicalize(cell.graph.contract(e)).encoding not in lower:
                        ok = False
        record(g, wspec, "contraction_closure", ok)

        # canonical-form invariance under random relabeling
        ok = True
        for ne in sorted(strata):
            for cell in strata[ne]:
                perm = list(range(cell.graph.num_vertices))
                rng.shuffle(perm)
                relabeled = cell.graph.relabel(perm)
                if canonicalize(relabeled).encoding != cell.form.encoding:
                    ok = False
        record(g, wspec, "canonical_relabel_invariance", ok)

        profile = betti_numbers(cc)
        if g >= 1:
            record(g, wspec, "b0_equals_1", profile.betti[0] == 1,
                   f"b0={profile.betti[0]}")
            b1 = profile.betti[1] if len(profile.betti) > 1 else 0
            record(g, wspec, "b1_equals_0", b1 == 0, f"b1={b1}")
            for fname in ("lw", "mlw"):
                sub = betti_numbers(
                    build_chain_complex(g, w, fname, strata=strata)
                )
                record(g, wspec, f"{fname}_acyclic", sub.is_point_like(),
                       f"reduced={list(sub.reduced_betti)}")

        # formula vs direct Euler characteristic
        direct = euler_from_cells(cc)
        rs = [r for r, _n in grothendieck_decomposition(g, w)]
        table = build_top_weight_table(g, rs, budget=budget, workers=args.workers)
        if all(r in table.values for r in rs):
            formula = euler_from_top_weight(g, w, table)
            record(g, wspec, "euler_formula_vs_direct", direct == formula,
                   f"direct={direct} formula={formula}")
        else:
            record(g, wspec, "euler_formula_vs_direct", True,
                   "skipped: top-weight entries unavailable")

    failures = [c for c in checks if not c["pass"]]
    if args.format == "json":
        _emit_json({"checks": checks, "failures": len(failures)})
    else:
        for c in checks:
            status = "PASS" if c["pass"] else "FAIL"
            detail = f" [{c['detail']}]" if c["detail"] else ""
            print(f"{status} g={c['g']} w={c['w']} {c['check']}{detail}")
        print(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    if failures:
        worst = failures[0]
        print(
            f"verification failed at (g={worst['g']}, w={worst['w']}, "
            f"{worst['check']})",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--budget", type=int, default=None,
                   help=f"max cell count (env {BUDGET_ENV_VAR})")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized property checks")


def _add_weight_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--w", type=str, default=None,
                   help='weight spec, e.g. "1,1,1/2" or "1^3,eps^2"')
    p.add_argument("--heavy-light", action="store_true")
    p.add_argument("--n", type=int, default=None, help="heavy marking count")
    p.add_argument("--m", type=int, default=None, help="light marking count")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropmod",
        description="Moduli of weight-stable tropical curves: enumeration, "
        "homology, and Euler characteristics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list isomorphism classes per stratum")
    _add_weight_opts(p)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("euler", help="Euler characteristic, direct and/or formula")
    _add_weight_opts(p)
    p.add_argument("--method", choices=("direct", "formula", "both"),
                   default="direct")
    _add_common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("homology", help="Betti numbers of the cell complex")
    _add_weight_opts(p)
    p.add_argument("--filter", choices=("all", "lw", "mlw", "q"), default="all")
    _add_common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("table", help="heavy/light Euler characteristic grid")
    p.add_argument("--check", action="store_true",
                   help="compare against the embedded golden table")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the structural invariant suite")
    p.add_argument("--g-max", type=int, default=None)
    p.add_argument("--inject-sign-flip", action="store_true",
                   help="test mode: corrupt one boundary entry and expect "
                   "the d^2 = 0 check to fail")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ValueError, BudgetExceeded,
            MissingTopWeightEntry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
