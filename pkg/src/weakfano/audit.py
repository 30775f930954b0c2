"""Golden-file audit: regenerate each table, then compare with transcribed fixtures.

Generation never looks at the fixtures; comparison happens afterwards on plain rows.
Known misprints are matched on (table, row, field, printed value, recomputed value)
so any other drift still shows up as a mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from .classifier import LINE_PAIRS, CONIC_PAIRS, P_ALL, P_QUADRIC, QUADRIC_SMALL, existence_audit, \
    p_membership_numeric, p_sets
from .lattice import make_dp4
from .sarkisov import crosscheck, infinite_secant_witness
from .surfaces import DP4Curve, bpf_alphabet, dp4_enumerate_weak_fano_pairs, generator_sum
from .tables import Row, generate

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


@dataclass(frozen=True)
class AuditResult:
    table_id: str
    status: Literal["match", "mismatch", "flagged"]
    diffs: tuple[tuple[str, str, str], ...] = ()
    notes: tuple[str, ...] = ()


# (table, row key, field) -> (printed, recomputed, explanation)
KNOWN_MISPRINTS: dict[tuple[str, str, str], tuple[str, str, str]] = {
    ("obstructions", "2,8,2,7", "GD"): (
        "-1", "1", "Γ·D of 2H-C-2Γ evaluates to +1; the contradiction only needs it nonzero"),
    ("dp4", "0,6,3,0,0,0,1,2", "decomposition"): (
        "Λ(2;1,1,1,1,0)+Λ(2;1,1,1,0,1)", "sums to Λ(4;2,2,2,1,1)",
        "printed summands miss one Λ(2;1,1,1,1,0); the residual still decomposes"),
}
KNOWN_UNCOVERED = {(4, 6), (13, 12)}

# key columns, compared columns
LAYOUT: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "B": (("d",), ("B",)),
    "pgd-nmax": (("g", "d"), ("polynomial", "raw", "nmax")),
    "obstructions": (("g", "d", "n", "cg"), ("divisor", "HD", "D2", "CD", "GD")),
    "plane-smooth": (("a", "b"), ("g", "d")),
    "plane-cone": (("a", "b"), ("g", "d")),
    "residual-f2": (("g", "d"), ("C", "R")),
    "dp4": (("g", "d", "k", "m"), ("R", "decomposition")),
    "sarkisov": (("block", "g", "d", "variant"),
                 ("outcome", "link", "minus_k_cubed", "target_k_cubed", "target_curve")),
}


def load_golden(table_id: str, golden_dir: Path = GOLDEN_DIR) -> list[Row]:
    lines = [ln.strip() for ln in (golden_dir / f"{table_id}.txt").read_text(encoding="utf-8").splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    header = lines[0].split()
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != len(header):
            raise ValueError(f"{table_id}: row {ln!r} has {len(parts)} fields, header has {len(header)}")
        rows.append(dict(zip(header, parts)))
    return rows


def _dp4_decomposition(gold: Row, comp: Row) -> str | None:
    """Compare the printed decomposition semantically; returns a computed value if it disagrees."""
    if gold["decomposition"] == "not-bpf":
        if comp["decomposition"] == "not-bpf" and comp["witness"] != "-":
            return None
        return comp["decomposition"]
    R = DP4Curve(int(gold["k"]), tuple(int(x) for x in gold["m"].split(","))).residual()
    labels = [] if gold["decomposition"] == "0" else gold["decomposition"].split("+")
    known = {g.label for g in bpf_alphabet(make_dp4())}
    if any(lab not in known for lab in labels):
        return "unknown generator"
    s = generator_sum(labels, make_dp4())
    if s == R:
        return None
    k, *negm = s.coords
    return f"sums to Λ({k};{','.join(str(-x) for x in negm)})"


def compare(table_id: str, computed: list[Row], golden: list[Row]) -> AuditResult:
    keys, cols = LAYOUT[table_id]
    kf = lambda r: ",".join(r[k] for k in keys)
    comp = {kf(r): r for r in computed}
    gold = {kf(r): r for r in golden}
    diffs, notes = [], []
    for k in sorted(set(gold) - set(comp)):
        diffs.append((k, "row present", "row missing"))
    for k in sorted(set(comp) - set(gold)):
        diffs.append((k, "row absent", "row generated"))
    for k in sorted(set(gold) & set(comp)):
        g, c = gold[k], comp[k]
        for col in cols:
            if table_id == "dp4" and col == "decomposition":
                got = _dp4_decomposition(g, c)
                if got is None:
                    continue
            elif g[col] == c[col]:
                continue
            else:
                got = c[col]
            known = KNOWN_MISPRINTS.get((table_id, k, col))
            if known and known[:2] == (g[col], got):
                notes.append(f"{k} {col}: printed {g[col]}, recomputed {got}; {known[2]}")
            else:
                diffs.append((f"{k}:{col}", g[col], got))
    if table_id == "residual-f2":
        for k, c in sorted(comp.items()):
            if c["decomposition"] == "none":
                diffs.append((f"{k}:decomposition", "base-point-free", "none"))
    status = "mismatch" if diffs else ("flagged" if notes else "match")
    return AuditResult(table_id, status, tuple(diffs), tuple(notes))


def _check(table_id: str, failures: list[tuple[str, str, str]], notes: list[str] = ()) -> AuditResult:
    status = "mismatch" if failures else ("flagged" if notes else "match")
    return AuditResult(table_id, status, tuple(failures), tuple(notes))


def extra_checks() -> list[AuditResult]:
    out = []
    sets = p_sets()
    bad = [(f"{g},{d}", str((g, d) in P_ALL), str(p_membership_numeric(g, d)))
           for d in range(1, 31) for g in range(0, 81) if ((g, d) in P_ALL) != p_membership_numeric(g, d)]
    if len(P_ALL) != 36 or len(sets["plane"]) + len(sets["quadric"]) + len(sets["cubic"]) != 38:
        bad.append(("sizes", "36 / 38", f"{len(P_ALL)} / {len(sets['plane']) + len(sets['quadric']) + len(sets['cubic'])}"))
    out.append(_check("p-membership", bad))

    bad = []
    rows = existence_audit()
    for r in rows:
        if not r.ok:
            bad.append((f"{r.g},{r.d}", "passes", f"{r.existence}/{r.low_degree}/n_max={r.n_max}"))
    lines = {(r.g, r.d) for r in rows if r.low_degree == "line"}
    conics = {(r.g, r.d) for r in rows if r.low_degree == "conic"}
    if lines != LINE_PAIRS:
        bad.append(("line pairs", str(sorted(LINE_PAIRS)), str(sorted(lines))))
    if conics != CONIC_PAIRS:
        bad.append(("conic pairs", str(sorted(CONIC_PAIRS)), str(sorted(conics))))
    out.append(_check("existence", bad))

    want = set(P_QUADRIC | QUADRIC_SMALL)
    got = dp4_enumerate_weak_fano_pairs()
    out.append(_check("dp4-weak-fano-pairs", [] if got == want else [("set", str(sorted(want)), str(sorted(got)))]))

    bad = []
    for variant, expected in (("on_hyperplane", 3), ("on_quadric_section", 6)):
        w = infinite_secant_witness(variant)
        if w.pairing != expected or not w.k_trivial:
            bad.append((variant, str(expected), str(w.pairing)))
    out.append(_check("witnesses", bad))

    rep = crosscheck()
    bad = [(m, "consistent", "inconsistent") for m in rep.mismatches]
    bad += [(f"{g},{d}", "in admissible set", "outside") for g, d in rep.not_in_p]
    notes = []
    for g, d in rep.uncovered:
        if (g, d) in KNOWN_UNCOVERED:
            notes.append(f"({g},{d}) is admissible but listed in no outcome block")
        else:
            bad.append((f"{g},{d}", "listed", "missing"))
    out.append(_check("catalog-crosscheck", bad, notes))
    return out


def run_audit(golden_dir: Path = GOLDEN_DIR) -> list[AuditResult]:
    computed = {t: generate(t) for t in LAYOUT}          # generation phase
    results = [compare(t, computed[t], load_golden(t, golden_dir)) for t in LAYOUT]   # comparison phase
    return results + extra_checks()


def audit_ok(results: list[AuditResult]) -> bool:
    return all(r.status != "mismatch" for r in results)
