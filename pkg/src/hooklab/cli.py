"""``hooklab`` command line.

Exit codes: 0 when every check passes, 1 when a check fails (the report is
still printed), 2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import beck, diagrams, dsl, identities
from .partitions import FAMILY_NAMES, Family, count, distinct_raw, partitions_raw
from .report import CheckResult, VerificationReport


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ output

def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([r[c] for c in cols])
        return
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    out.write("  ".join(c.rjust(widths[c]) for c in cols).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(r[c]).rjust(widths[c]) for c in cols).rstrip() + "\n")


def _report_csv(reports: Sequence[VerificationReport], timing: bool, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["identity", "order", "status", "q_order", "lhs", "rhs", "delta", "elapsed_ms"])
    for r in reports:
        f = r.first_failure
        fail = ["", "", "", ""] if f is None else [f.q_order, f.lhs.format(), f.rhs.format(), f.delta.format()]
        w.writerow([r.identity, r.order, r.status, *fail, r.elapsed_ms if timing else 0])


# ------------------------------------------------------------------ commands

def _load_identity(source: str):
    """Builtin name, or a path to a text file holding one identity."""
    if source in identities.BUILTINS:
        return source, source
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
        return dsl.compile(text).ast, os.path.splitext(os.path.basename(source))[0]
    raise UsageError(f"unknown identity {source!r} (not a builtin and not a file); "
                     f"builtins: {', '.join(identities.BUILTINS)}")


def cmd_verify(args, out) -> int:
    ident, name = _load_identity(args.identity)
    order = args.order if args.order is not None else identities.default_order(ident)
    report = identities.verify(ident, order, jobs=args.jobs, name=name)
    timing = not args.no_timing
    if args.format == "json":
        out.write(json.dumps(report.to_json(timing), indent=2) + "\n")
    elif args.format == "csv":
        _report_csv([report], timing, out)
    else:
        out.write(report.text(timing) + "\n")
    return 0 if report.passed else 1


def cmd_count(args, out) -> int:
    fam = Family.parse(args.family)
    rows = [{"n": n, "count": count(n, fam)} for n in range(args.max + 1)]
    _emit_rows(rows, args.format, out)
    return 0


def cmd_stats(args, out) -> int:
    rows, ok = [], True
    for n in range(args.max + 1):
        for lam in partitions_raw(n):
            lam = tuple(lam)
            part = "[" + ",".join(map(str, lam)) + "]"
            if args.stat == "hooksum":
                w = diagrams.bit_string(lam)
                hs, inv = diagrams.hook_sum(lam), diagrams.inversion_sum(w)
                ok &= hs == inv
                rows.append({"n": n, "partition": part, "hook_sum": hs, "inversion_sum": inv})
            elif args.stat == "bitstring":
                rows.append({"n": n, "partition": part, "bit_string": diagrams.bit_string(lam)})
            else:
                x = diagrams.trim(diagrams.xray(lam))
                rows.append({"n": n, "partition": part, "xray": " ".join(map(str, x)),
                             "length": diagrams.xray_length(lam)})
    _emit_rows(rows, args.format, out)
    return 0 if ok else 1


def cmd_parity(args, out) -> int:
    _emit_rows(beck.parity_rows(args.max), args.format, out)
    return 0 if beck.parity_check(args.max).passed else 1


def cmd_beck(args, out) -> int:
    rows = beck.beck_rows(int(args.which), args.max)
    _emit_rows(rows, args.format, out)
    return 0 if all(r["ok"] for r in rows) else 1


def cmd_table(args, out) -> int:
    tri = diagrams.staircase_triangle(args.rows)
    if args.format == "text":
        for row in tri:
            out.write(",".join(map(str, row)) + "\n")
        return 0
    rows = []
    for n, row in enumerate(tri, start=1):
        rec = {"n": n}
        rec.update({f"r{r}": (row[r - 1] if r <= n else 0) for r in range(1, args.rows + 1)})
        rows.append(rec)
    _emit_rows(rows, args.format, out)
    return 0


# ------------------------------------------------------------------ suite

def _structural_checks(order: int) -> list[CheckResult]:
    small = min(order, 25)
    out = []

    bad = [[list(lam), diagrams.hook_sum(lam), diagrams.inversion_sum(diagrams.bit_string(lam))]
           for n in range(small + 1) for lam in map(tuple, partitions_raw(n))
           if diagrams.hook_sum(lam) != diagrams.inversion_sum(diagrams.bit_string(lam))]
    out.append(CheckResult("hook_sum_equals_inversion_sum", not bad, {"max_n": small, "mismatches": bad}))

    mismatches, shape, phi_bad = [], [], []
    for n in range(small + 1):
        classes = diagrams.xray_classes(n)
        q_n = sum(1 for _ in distinct_raw(n))
        if len(classes) != q_n:
            mismatches.append([n, len(classes), q_n])
        for x in classes:
            if not diagrams.is_xray_shape(x):
                shape.append(list(x))
            elif diagrams.trim(diagrams.xray(diagrams.phi(x))) != x:
                phi_bad.append(list(x))
    out.append(CheckResult("xray_classes", not (mismatches or shape or phi_bad),
                           {"max_n": small, "count_mismatches": mismatches,
                            "bad_shapes": shape, "phi_not_inverse": phi_bad}))

    rows = max(1, min(order, 15))
    try:
        tri = diagrams.staircase_triangle(rows)
        out.append(CheckResult("staircase_triangle", True, {"rows": rows, "triangle": tri}))
    except AssertionError as e:
        out.append(CheckResult("staircase_triangle", False, {"rows": rows, "error": str(e)}))
    return out


def _beck_check(which: int, order: int) -> CheckResult:
    rows = beck.beck_rows(which, order)
    bad = [r["n"] for r in rows if not r["ok"]]
    return CheckResult(f"beck_{which}", not bad, {"max_n": order, "failures": bad})


def run_suite(order: int | None, jobs: int) -> tuple[list[VerificationReport], list[CheckResult]]:
    reports = []
    for name, b in identities.BUILTINS.items():
        n = order if order is not None else b.default_order
        reports.append(identities.verify(name, n, jobs=jobs))
    o = order if order is not None else 30
    bivariate = min(o, 12) if order is None else o
    reports.append(beck.verify_lemma_4_1(bivariate))
    reports.append(beck.verify_cor_4_3(bivariate))
    checks = [
        _beck_check(1, o), _beck_check(2, o),
        beck.verify_eq_3_2(o), beck.parity_check(o), beck.check_sigma_mod2(o),
        beck.check_bivariate_counts(bivariate), beck.check_specializations(bivariate),
        *_structural_checks(o),
    ]
    return reports, checks


def cmd_suite(args, out) -> int:
    timing = args.timing
    reports, checks = run_suite(args.order, args.jobs)
    passed = all(r.passed for r in reports) and all(c.passed for c in checks)
    if args.format == "json":
        doc = {
            "order": args.order,
            "status": "pass" if passed else "fail",
            "identities": [r.to_json(timing) for r in reports],
            "checks": [c.to_json() for c in checks],
        }
        out.write(json.dumps(doc, indent=2, default=str) + "\n")
    elif args.format == "csv":
        _report_csv(reports, timing, out)
        w = csv.writer(out, lineterminator="\n")
        for c in checks:
            w.writerow([c.name, args.order if args.order is not None else "", c.status, "", "", "", "", 0])
    else:
        for r in reports:
            out.write(r.text(timing) + "\n")
        for c in checks:
            out.write(c.text() + "\n")
        out.write(("PASS" if passed else "FAIL") + " suite\n")
    return 0 if passed else 1


# ------------------------------------------------------------------ parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hooklab", description="Hook-length and symplectic-content identity checker.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = ("text", "json", "csv")

    v = sub.add_parser("verify", help="verify a builtin identity or an identity file")
    v.add_argument("--identity", required=True, help="builtin name or path to an identity file")
    v.add_argument("--order", type=_positive, default=None,
                   help="truncation order (default 30 for identities in t, 60 otherwise)")
    v.add_argument("--jobs", type=_positive, default=identities.default_jobs())
    v.add_argument("--format", choices=formats, default="text")
    v.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("count", help="count partitions in a family for n = 0..max")
    c.add_argument("--family", required=True, help=f"one of {', '.join(FAMILY_NAMES)}; staircase families take (r)")
    c.add_argument("--max", type=_positive, required=True)
    c.add_argument("--format", choices=formats, default="text")
    c.set_defaults(fn=cmd_count)

    s = sub.add_parser("stats", help="per-partition statistics for n = 0..max")
    s.add_argument("--stat", choices=("hooksum", "bitstring", "xray"), required=True)
    s.add_argument("--max", type=_positive, required=True)
    s.add_argument("--format", choices=formats, default="text")
    s.set_defaults(fn=cmd_stats)

    pa = sub.add_parser("parity", help="parity of distinct partitions with odd and even rank")
    pa.add_argument("--max", type=_positive, required=True)
    pa.add_argument("--format", choices=formats, default="text")
    pa.set_defaults(fn=cmd_parity)

    b = sub.add_parser("beck", help="Beck-type excess identities")
    b.add_argument("--which", choices=("1", "2"), required=True)
    b.add_argument("--max", type=_positive, required=True)
    b.add_argument("--format", choices=formats, default="text")
    b.set_defaults(fn=cmd_beck)

    t = sub.add_parser("table", help="partitions maximally contained in a staircase")
    t.add_argument("--triangle", choices=("maximal-staircase",), required=True)
    t.add_argument("--rows", type=int, required=True)
    t.add_argument("--format", choices=formats, default="text")
    t.set_defaults(fn=cmd_table)

    su = sub.add_parser("suite", help="every builtin identity plus all cross-checks")
    su.add_argument("--order", type=_positive, default=None)
    su.add_argument("--jobs", type=_positive, default=identities.default_jobs())
    su.add_argument("--format", choices=formats, default="json")
    su.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    su.set_defaults(fn=cmd_suite)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "rows", 1) < 1:
            raise UsageError("--rows must be at least 1")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        buf = io.StringIO()
        code = args.fn(args, buf)
        out.write(buf.getvalue())
        return code
    except UsageError as e:
        print(f"hooklab: error: {e}", file=sys.stderr)
        return 2
    except (dsl.DslError, identities.UnknownIdentity, identities.OrderTooSmall, ValueError) as e:
        print(f"hooklab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
