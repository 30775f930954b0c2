"""Catalog of what the anticanonical model and the second contraction do for each weak Fano pair.

Rows are literature data transcribed from the classification tables; the only
thing derived here is the arithmetic consistency check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Literal

from .classifier import P_ALL, anticanonical_cube
from .lattice import make_dp4, make_quadric_smooth

Outcome = Literal["fano_divisorial", "fano_fibring", "no_link_divisorial", "flop_then_divisorial",
                  "flop_then_fibring"]
LINK = {"fano_divisorial": "II", "fano_fibring": "I", "no_link_divisorial": "none",
        "flop_then_divisorial": "II", "flop_then_fibring": "I"}


@dataclass(frozen=True)
class SarkisovRecord:
    g: int
    d: int
    variant: Literal["generic", "on_hyperplane", "on_quadric_section"]
    outcome: Outcome
    link_type: Literal["I", "II", "none"]
    minus_k_cubed: int
    target: str
    reference_tag: str
    block: str
    # flop rows: -K^3 of Y+ verbatim (one value is 21/2) and the image of E
    target_k_cubed: str | None = None
    target_curve: tuple[int, int] | None = None
    fibration: str | None = None
    ambiguous: bool = False


def _r(block, outcome, g, d, k3, target, ref, variant="generic", **kw) -> SarkisovRecord:
    return SarkisovRecord(g, d, variant, outcome, LINK[outcome], k3, target, ref, block, **kw)


_F7, _F8, _N9, _D10, _B10 = "fano-divisorial", "fano-fibring", "no-link", "flop-divisorial", "flop-fibring"

_ROWS: tuple[SarkisovRecord, ...] = (
    _r(_F7, "fano_divisorial", 0, 3, 34, "blowup of a Fano threefold of Picard rank 1, degree 5, index 1 along a line",
       "Mori-Mukai Nr.26"),
    _r(_F7, "fano_divisorial", 0, 4, 28, "blowup of a smooth quadric threefold along a rational quartic",
       "Mori-Mukai Nr.21"),
    _r(_F7, "fano_divisorial", 1, 4, 30, "blowup of a singular intersection of two quadrics in its singular point",
       "Mori-Mukai Nr.23"),
    _r(_F7, "fano_divisorial", 1, 5, 24, "blowup of P3 along an elliptic quintic", "Mori-Mukai Nr.17"),

    _r(_F8, "fano_fibring", 0, 1, 46, "P1-bundle over P2", "Mori-Mukai Nr.31", fibration="P1-bundle"),
    _r(_F8, "fano_fibring", 0, 2, 40, "del Pezzo fibration of degree 8", "Mori-Mukai Nr.29", fibration="dPf8"),
    _r(_F8, "fano_fibring", 2, 6, 20, "conic bundle over P2", "Mori-Mukai Nr.13", fibration="conic bundle"),
    _r(_F8, "fano_fibring", 5, 8, 14, "del Pezzo fibration of degree 4", "Mori-Mukai Nr.7", fibration="dPf4"),

    _r(_N9, "no_link_divisorial", 0, 4, 28, "anticanonical model in P(O^3+O(2)) over Y", "JPR-I A.4 Nr.18",
       "on_hyperplane", target_curve=(0, 2)),
    _r(_N9, "no_link_divisorial", 2, 5, 26, "anticanonical model in P(O^2+O(2)) over Y", "JPR-I A.4 Nr.17",
       target_curve=(0, 1)),
    _r(_N9, "no_link_divisorial", 3, 8, 10, "canonical Gorenstein threefold", "JPR-I A.4 Nr.16",
       "on_quadric_section", target_curve=(0, 2)),
    _r(_N9, "no_link_divisorial", 6, 10, 4, "quartic hypersurface in P4 or double cover of Y ramified in a quartic",
       "JPR-I A.4 Nr.14", target_curve=(1, 5)),
    _r(_N9, "no_link_divisorial", 8, 10, 8, "complete intersection of three quadrics in P6", "JPR-I A.4 Nr.15",
       target_curve=(0, 1)),
    _r(_N9, "no_link_divisorial", 11, 12, 2, "double cover of P3 ramified in a sextic", "JPR-I A.4 Nr.13",
       target_curve=(3, 6)),
)

_FLOP_DIV = [  # g d -K^3 -K^3(Y+) g+ d+ reference
    (0, 6, 16, "22", 0, 2, "Takeuchi (2.8)"),
    (0, 8, 4, "54", 0, 8, "ACM No.71"),
    (1, 7, 12, "40", 1, 7, "ACM No.105"),
    (1, 8, 6, "22", 1, 8, "ACM No.86"),
    (2, 7, 14, "18", 0, 1, "Iskovskikh-Prokhorov 4.3.3(vii)"),
    (2, 8, 8, "18", 0, 4, "ACM No.97"),
    (2, 9, 2, "54", 2, 9, "ACM No.44"),
    (3, 8, 10, "54", 3, 8, "CM-update No.102"),
    (3, 9, 4, "16", 0, 5, "ACM No.70"),
    (4, 9, 6, "54", 4, 9, "ACM No.88"),
    (5, 10, 2, "54", 5, 10, "ACM No.45"),
    (6, 10, 4, "54", 6, 10, "CM-update No.72"),
    (7, 10, 6, "12", 0, 2, "Takeuchi (2.8)"),
    (8, 11, 2, "54", 8, 11, "ACM No.46"),
    (11, 12, 2, "54", 11, 12, "CM-update No.47"),
    (14, 13, 2, "54", 14, 13, "ACM No.48"),
]
_FLOP_POINT = [
    (4, 8, 12, "14", "blowup of Y+ in an ordinary double point, E = P1xP1", "CM 3.2.2 No.5"),
    (6, 9, 10, "21/2", "blowup of Y+ in a quadruple non-Gorenstein point, E = P2", "CM 3.2.3 No.5"),
]
_FLOP_FIB = [
    (0, 5, 22, "conic bundle", "JPR-II 7.13 Nr.17"),
    (1, 6, 18, "dPf6", "JPR-II 7.4 Nr.3"),
    (0, 7, 10, "conic bundle", "JPR-II 7.13 Nr.13"),
    (3, 7, 16, "dPf5", "JPR-II 7.4 Nr.5"),
    (5, 9, 8, "conic bundle", "JPR-II 7.13 Nr.10"),
    (9, 11, 4, "dPf5", "JPR-II 7.4 Nr.17"),
]

_ROWS += tuple(_r(_D10, "flop_then_divisorial", g, d, k, f"blowup of Y+ along a curve of genus {gp} degree {dp}", ref,
                  target_k_cubed=ky, target_curve=(gp, dp)) for g, d, k, ky, gp, dp, ref in _FLOP_DIV)
_ROWS += tuple(_r(_D10, "flop_then_divisorial", g, d, k, t, ref, target_k_cubed=ky) for g, d, k, ky, t, ref in _FLOP_POINT)
_ROWS += tuple(_r(_B10, "flop_then_fibring", g, d, k, fib, ref, fibration=fib) for g, d, k, fib, ref in _FLOP_FIB)

BLOCKS = (_F7, _F8, _N9, _D10, _B10)


def catalog() -> list[SarkisovRecord]:
    """All 38 rows; a (g,d,variant) key listed in two blocks is marked ambiguous."""
    count = Counter((r.g, r.d, r.variant) for r in _ROWS)
    return [replace(r, ambiguous=count[(r.g, r.d, r.variant)] > 1) for r in _ROWS]


@dataclass(frozen=True)
class CrosscheckReport:
    mismatches: tuple[str, ...]
    not_in_p: tuple[tuple[int, int], ...]
    uncovered: tuple[tuple[int, int], ...]
    ambiguous: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.not_in_p


def crosscheck() -> CrosscheckReport:
    """Formula and membership consistency.

    Pairs of the admissible set missing from every block are reported
    separately: they are a coverage gap of the transcribed data, not an arithmetic error.
    """
    rows = catalog()
    mism = []
    for r in rows:
        if r.minus_k_cubed != anticanonical_cube(r.g, r.d):
            mism.append(f"({r.g},{r.d}) {r.block}: -K^3 {r.minus_k_cubed} != {anticanonical_cube(r.g, r.d)}")
        if LINK[r.outcome] != r.link_type:
            mism.append(f"({r.g},{r.d}) {r.block}: link {r.link_type} does not fit {r.outcome}")
        if r.target_k_cubed == "54" and r.target_curve != (r.g, r.d):
            mism.append(f"({r.g},{r.d}) {r.block}: Y+ of degree 54 but image curve {r.target_curve}")
    pairs = {(r.g, r.d) for r in rows}
    return CrosscheckReport(
        tuple(mism),
        tuple(sorted(pairs - P_ALL)),
        tuple(sorted(P_ALL - pairs, key=lambda p: (p[1], p[0]))),
        tuple(sorted({(r.g, r.d) for r in rows if r.ambiguous}, key=lambda p: (p[1], p[0]))),
    )


@dataclass(frozen=True)
class WitnessCheck:
    variant: str
    g: int
    d: int
    secant: str
    curve: str
    secant_degree: int
    pairing: int | None

    @property
    def k_trivial(self) -> bool:
        """A degree-n curve meeting C in exactly 3n points is K_X-trivial."""
        return self.pairing == 3 * self.secant_degree


def infinite_secant_witness(variant: str) -> WitnessCheck:
    """Moving families of 3n-secants that make -K_X non-ample on the special variants."""
    if variant == "on_hyperplane":
        S = make_quadric_smooth()
        f2, C = S.cls(0, 1), S.cls(3, 1)
        return WitnessCheck(variant, 0, 4, f2.label(), C.label(), f2.dot(S.H), f2.dot(C))
    if variant == "on_quadric_section":
        S = make_dp4()
        D, C = S.cls(2, -1, -1, -1, -1, 0), S.cls(5, -1, -1, -1, -1, -3)
        return WitnessCheck(variant, 3, 8, D.label(), C.label(), D.dot(S.H), D.dot(C))
    if variant == "generic":
        return WitnessCheck(variant, 0, 0, "", "", 0, None)
    raise ValueError(f"unknown variant {variant!r}")
