"""Regenerate every reproduced table from scratch, as lists of string-valued rows."""
from __future__ import annotations

from typing import Callable

from .classifier import P_ALL, P_QUADRIC, PgdPolynomial, nmax_refined, pgd_nmax_raw
from .k3 import genus_bound_B
from .lattice import DivisorClass
from .sarkisov import catalog
from .surfaces import (bpf_decompose, enumerate_cone_curves, enumerate_dp4_curves,
                       enumerate_smooth_quadric_curves, fixed_line_witness, lambda_label, residual_system_f2)

Row = dict[str, str]


def _by_degree(pairs):
    return sorted(pairs, key=lambda p: (p[1], p[0]))


def lambda_of(D: DivisorClass) -> str:
    k, *negm = D.coords
    return lambda_label(k, [-x for x in negm])


def table_B() -> list[Row]:
    return [{"d": str(d), "r": str(genus_bound_B(d).r), "B": str(genus_bound_B(d).value)} for d in range(1, 19)]


def table_pgd_nmax() -> list[Row]:
    rows = []
    for g, d in _by_degree(P_ALL):
        P = PgdPolynomial(g, d)
        n, certs = nmax_refined(g, d)
        raw = pgd_nmax_raw(g, d)
        how = "-" if n == raw else sorted({c.reason for c in certs if c.n > n and c.reason != "polynomial_negative"})[0]
        rows.append({"g": str(g), "d": str(d), "b": str(P.coefficients[1]), "c": str(P.coefficients[2]),
                     "polynomial": P.text().replace(" ", ""), "raw": str(raw), "nmax": str(n), "lowered_by": how})
    return rows


def table_obstructions() -> list[Row]:
    rows = []
    for g, d in _by_degree(P_ALL):
        for c in nmax_refined(g, d)[1]:
            if c.reason != "contradictory_divisor":
                continue
            hd, sq, cd, gd = c.numbers
            rows.append({"g": str(g), "d": str(d), "n": str(c.n), "cg": str(c.cg), "divisor": c.label(),
                         "HD": str(hd), "D2": str(sq), "CD": str(cd), "GD": str(gd), "pattern": c.pattern})
    return rows


def table_plane_smooth() -> list[Row]:
    return [{"a": str(c.a), "b": str(c.b), "g": str(g), "d": str(d)} for c, g, d in enumerate_smooth_quadric_curves(6)]


def table_plane_cone() -> list[Row]:
    return [{"a": str(c.a), "b": str(c.b), "g": str(g), "d": str(d)} for c, g, d in enumerate_cone_curves(6)]


def table_residual_f2() -> list[Row]:
    rows = []
    for c, g, d in enumerate_cone_curves(6):
        R = residual_system_f2(c)
        dec = bpf_decompose(R)
        rows.append({"g": str(g), "d": str(d), "C": c.cls().label(), "R": R.label(),
                     "decomposition": dec.text().replace(" ", "") if dec else "none"})
    return rows


def table_dp4() -> list[Row]:
    rows = []
    for c, g, d in enumerate_dp4_curves(_by_degree(P_QUADRIC)):
        R = c.residual()
        dec = bpf_decompose(R)
        w = fixed_line_witness(R, c.cls())
        rows.append({"g": str(g), "d": str(d), "k": str(c.k), "m": ",".join(map(str, c.m)), "R": lambda_of(R),
                     "decomposition": dec.text().replace(" ", "") if dec else "not-bpf",
                     "witness": w.label() if w is not None and dec is None else "-"})
    return rows


def table_sarkisov() -> list[Row]:
    from .classifier import anticanonical_cube
    rows = []
    for r in catalog():
        rows.append({"block": r.block, "g": str(r.g), "d": str(r.d), "variant": r.variant, "outcome": r.outcome,
                     "link": r.link_type, "minus_k_cubed": str(anticanonical_cube(r.g, r.d)),
                     "target_k_cubed": r.target_k_cubed or "-",
                     "target_curve": ",".join(map(str, r.target_curve)) if r.target_curve else "-",
                     "ambiguous": "yes" if r.ambiguous else "no", "reference": r.reference_tag})
    return rows


TABLES: dict[str, Callable[[], list[Row]]] = {
    "B": table_B,
    "pgd-nmax": table_pgd_nmax,
    "obstructions": table_obstructions,
    "plane-smooth": table_plane_smooth,
    "plane-cone": table_plane_cone,
    "residual-f2": table_residual_f2,
    "dp4": table_dp4,
    "sarkisov": table_sarkisov,
}


def generate(table_id: str) -> list[Row]:
    if table_id not in TABLES:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLES)}")
    return TABLES[table_id]()
