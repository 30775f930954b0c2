"""Command-line front end: classify a curve, print a table, or run the audit.

Exit codes for classify: 0 weak_fano, 1 not_weak_fano, 2 insufficient_data.
Usage errors exit with 64 so they never collide with a verdict.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .audit import AuditResult, audit_ok, run_audit
from .classifier import CurveInstance, classify, nmax_refined, P_ALL
from .tables import TABLES, generate

USAGE_ERROR = 64
VERDICT_CODE = {"weak_fano": 0, "not_weak_fano": 1, "insufficient_data": 2}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def emit_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    out = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    out += ["  ".join(str(r[c]).ljust(widths[c]) for c in cols).rstrip() for r in rows]
    return "\n".join(out) + "\n"


def classification_document(c: CurveInstance) -> dict:
    res = classify(c)
    certs = []
    if (c.g, c.d) in P_ALL:
        for cert in nmax_refined(c.g, c.d)[1]:
            certs.append({"n": cert.n, "reason": cert.reason, "cg": cert.cg,
                          "divisor": cert.label() if cert.divisor else None,
                          "numbers": list(cert.numbers) if cert.numbers else None})
    return {"g": c.g, "d": c.d, "containment": c.containment, "has_4secant_line": c.has_4secant_line,
            "has_7secant_conic": c.has_7secant_conic, "verdict": res.verdict, "reasons": list(res.reasons),
            "missing": list(res.missing), "conflicts": list(res.conflicts), "n_max": res.n_max,
            "certificates": certs}


def _classify_text(doc: dict) -> str:
    lines = [f"({doc['g']},{doc['d']}) {doc['verdict']}"]
    lines += [f"  reason: {r}" for r in doc["reasons"]]
    lines += [f"  missing: {m}" for m in doc["missing"]]
    lines += [f"  conflict: {m}" for m in doc["conflicts"]]
    if doc["n_max"] is not None:
        lines.append(f"  n_max: {doc['n_max']}")
    for c in doc["certificates"]:
        if c["reason"] == "contradictory_divisor":
            lines.append(f"  certificate n={c['n']} C·Γ={c['cg']}: {c['divisor']} {tuple(c['numbers'])}")
        elif c["reason"] == "special_rule_1_6":
            lines.append(f"  certificate n={c['n']}: C plus a 4-secant line would be a (4,7) class")
        else:
            lines.append(f"  certificate n={c['n']}: P_g,d(n) < 0")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> tuple[int, str]:
    c = CurveInstance(args.genus, args.degree, args.containment, args.line, args.conic)
    doc = classification_document(c)
    if args.format == "json":
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        flat = {k: (";".join(v) if isinstance(v, list) and k != "certificates" else v)
                for k, v in doc.items() if k != "certificates"}
        text = emit_rows([flat], "csv")
    else:
        text = _classify_text(doc)
    return VERDICT_CODE[doc["verdict"]], text


def cmd_table(table_id: str, fmt: str) -> str:
    return emit_rows(generate(table_id), fmt)


def audit_document(results: list[AuditResult], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in results], indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return emit_rows([{"table_id": r.table_id, "status": r.status, "diffs": len(r.diffs), "notes": len(r.notes)}
                          for r in results], "csv")
    lines = []
    for r in results:
        lines.append(f"{r.table_id}: {r.status}")
        lines += [f"  diff {k}: expected {e!r}, computed {c!r}" for k, e, c in r.diffs]
        lines += [f"  note {n}" for n in r.notes]
    return "\n".join(lines) + "\n"


def cmd_audit(fmt: str = "text", golden_dir=None) -> tuple[int, str]:
    results = run_audit(golden_dir) if golden_dir else run_audit()
    return (0 if audit_ok(results) else 1), audit_document(results, fmt)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weakfano", description="Weak Fano blowups of a smooth quadric threefold along a curve.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="decide weak Fano status for one curve")
    c.add_argument("-g", "--genus", type=int, required=True)
    c.add_argument("-d", "--degree", type=int, required=True)
    where = c.add_mutually_exclusive_group()
    where.add_argument("--hyperplane", dest="containment", action="store_const", const="hyperplane")
    where.add_argument("--quadric-section", dest="containment", action="store_const",
                       const="smooth_quadric_section")
    where.add_argument("--cubic-section", dest="containment", action="store_const", const="smooth_cubic_section")
    line = c.add_mutually_exclusive_group()
    line.add_argument("--no-4secant-line", dest="line", action="store_const", const="no")
    line.add_argument("--has-4secant-line", dest="line", action="store_const", const="yes")
    conic = c.add_mutually_exclusive_group()
    conic.add_argument("--no-7secant-conic", dest="conic", action="store_const", const="no")
    conic.add_argument("--has-7secant-conic", dest="conic", action="store_const", const="yes")
    c.add_argument("--format", choices=("text", "csv", "json"), default="text")
    c.set_defaults(containment="unknown", line="unknown", conic="unknown")

    t = sub.add_parser("table", help="regenerate one table")
    t.add_argument("table_id", choices=list(TABLES))
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")

    a = sub.add_parser("audit", help="compare every regenerated table with the golden fixtures")
    a.add_argument("--format", choices=("text", "csv", "json"), default="text")
    a.add_argument("--golden-dir", default=None, help=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify":
        if args.genus < 0 or args.degree < 1:
            parser.error("need genus >= 0 and degree >= 1")
        code, text = cmd_classify(args)
    elif args.command == "table":
        code, text = 0, cmd_table(args.table_id, args.format)
    else:
        code, text = cmd_audit(args.format, Path(args.golden_dir) if args.golden_dir else None)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
