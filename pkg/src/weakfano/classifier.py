"""Weak Fano decision procedure for blowups of a smooth quadric threefold along a curve.

The numerical side: the named (g,d) sets, the bound polynomial P_{g,d}, the
contradictory-divisor search that lowers n_max, and the classify() decision tree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .k3 import detect_low_degree_curves, genus_bound_B, knutsen_smooth_quadric_existence, \
    is_line_plus_elliptic_sextic
from .lattice import DivisorClass, make_k3_rank3

Pair = tuple[int, int]

P_NONE: frozenset[Pair] = frozenset({
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (2, 7),
    (3, 7), (4, 6), (4, 8), (5, 8), (6, 9), (8, 10), (9, 11), (13, 12), (14, 13)})
P_LINE: frozenset[Pair] = frozenset({
    (0, 6), (0, 7), (1, 7), (2, 8), (3, 8), (4, 9), (5, 9), (6, 10), (7, 10), (8, 11), (11, 12)})
P_CONIC: frozenset[Pair] = frozenset({(0, 8), (1, 8), (2, 9), (3, 9), (5, 10)})
P_PLANE: frozenset[Pair] = frozenset({(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 5), (4, 6)})
P_QUADRIC: frozenset[Pair] = frozenset({
    (0, 4), (0, 5), (0, 6), (1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 8), (5, 8),
    (6, 9), (8, 10), (13, 12)})
P_CUBIC: frozenset[Pair] = frozenset({
    (0, 7), (0, 8), (1, 7), (1, 8), (2, 8), (2, 9), (3, 8), (3, 9), (4, 9), (5, 9), (5, 10),
    (6, 10), (7, 10), (8, 11), (9, 11), (11, 12), (14, 13)})
P_ALL: frozenset[Pair] = P_NONE | P_LINE | P_CONIC

# pairs that need a 4-secant-line exclusion even on a smooth quadric section
QUADRIC_LINE_EXCEPTIONS: frozenset[Pair] = frozenset({(0, 6), (3, 8)})
# small pairs also reached on a quartic del Pezzo (degree <= 4, lie in a hyperplane)
QUADRIC_SMALL: frozenset[Pair] = frozenset({(0, 1), (0, 2), (0, 3), (1, 4)})


def p_sets() -> dict[str, frozenset[Pair]]:
    return {"none": P_NONE, "line": P_LINE, "conic": P_CONIC, "plane": P_PLANE,
            "quadric": P_QUADRIC, "cubic": P_CUBIC, "all": P_ALL}


def p_membership_numeric(g: int, d: int) -> bool:
    if (g, d) in ((4, 6), (13, 12)):
        return True
    return d < 18 and 3 * d - 26 < g and 12 * g <= d * d - 1 and (g, d) not in ((4, 7), (10, 11))


def anticanonical_cube(g: int, d: int) -> int:
    return 52 - 6 * d + 2 * g


def anticanonical_sq_E(g: int, d: int) -> int:
    return 3 * d - 2 * g + 2


def anticanonical_dim(g: int, d: int) -> Fraction:
    return Fraction(anticanonical_cube(g, d), 2) + 3


def secant_pairing(n: int, eE: int) -> int:
    """-K_X on the strict transform of a degree-n curve meeting C in eE points."""
    return 3 * n - eE


@dataclass(frozen=True)
class PgdPolynomial:
    g: int
    d: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (1, -(36 - 2 * self.d), self.d * self.d - 12 * self.g - 1)

    def __call__(self, n: int) -> int:
        a, b, c = self.coefficients
        return a * n * n + b * n + c

    def text(self) -> str:
        _, b, c = self.coefficients
        s = "n^2"
        if b:
            s += f" - {-b}n" if b < 0 else f" + {b}n"
        if c:
            s += f" - {-c}" if c < 0 else f" + {c}"
        return s


def _require_p(g: int, d: int) -> None:
    if (g, d) not in P_ALL:
        raise ValueError(f"({g},{d}) is not in the admissible set")


def pgd_nmax_raw(g: int, d: int) -> int:
    """Largest n in (0, 18-d) with P_{g,d}(n) >= 0, else 0."""
    _require_p(g, d)
    P = PgdPolynomial(g, d)
    return max((n for n in range(1, 18 - d) if P(n) >= 0), default=0)


def cg_range(g: int, d: int, n: int) -> range:
    """Admissible values of C·Γ for a (3n+1)-secant Γ of degree n on S."""
    return range(3 * n + 1, genus_bound_B(d + n).value + 1 - g + 1)


@dataclass(frozen=True)
class ObstructionCertificate:
    g: int
    d: int
    n: int
    reason: Literal["polynomial_negative", "contradictory_divisor", "special_rule_1_6"]
    cg: int | None = None
    divisor: tuple[int, int, int] | None = None
    numbers: tuple[int, int, int, int] | None = None   # (H·D, D², C·D, Γ·D)
    pattern: Literal["i", "ii"] | None = None
    cg_range: tuple[int, int] | None = None

    def lattice_divisor(self) -> DivisorClass:
        assert self.divisor is not None and self.cg is not None
        return make_k3_rank3(self.g, self.d, self.n, self.cg).cls(*self.divisor)

    def label(self) -> str:
        return self.lattice_divisor().label() if self.divisor else ""


def contradiction_pattern(D: DivisorClass, d: int, n: int) -> tuple[str | None, tuple[int, int, int, int]]:
    """Which contradiction (if any) a class in the rank-3 lattice witnesses.

    (i): D is a (-2)-curve of small degree with negative pairing against C or Γ,
         so it would be a component of an irreducible curve of larger degree.
    (ii): H·D = 0 and D² > -4 force D = 0, yet D pairs nontrivially with the basis.
    """
    H, C, G = D.lattice.basis()
    nums = (D.dot(H), D.square(), D.dot(C), D.dot(G))
    hd, sq, cd, gd = nums
    if sq == -2 and hd >= 1 and ((hd < d and cd < 0) or (hd < n and gd < 0)):
        return "i", nums
    if hd == 0 and sq in (-2, 0) and (cd != 0 or gd != 0):
        return "ii", nums
    return None, nums


def _rank(abc: tuple[int, int, int]) -> tuple:
    # smallest coefficients first; ties prefer the positive leading coefficient
    return (sum(map(abs, abc)), tuple(-x for x in abc))


@lru_cache(maxsize=None)
def certificates_for(g: int, d: int, n: int, cg: int, box: int = 3) -> tuple[ObstructionCertificate, ...]:
    """All contradictory divisors in the box for one value of C·Γ, preferred one first."""
    S = make_k3_rank3(g, d, n, cg)
    rng = cg_range(g, d, n)
    lo, hi = (rng[0], rng[-1]) if rng else (cg, cg)
    found = []
    for abc in itertools.product(range(-box, box + 1), repeat=3):
        pat, nums = contradiction_pattern(S.cls(*abc), d, n)
        if pat:
            found.append(ObstructionCertificate(g, d, n, "contradictory_divisor", cg, abc, nums, pat, (lo, hi)))
    found.sort(key=lambda c: _rank(c.divisor))
    return tuple(found)


def search_contradictory_divisor(g: int, d: int, n: int) -> list[ObstructionCertificate] | None:
    """One certificate per C·Γ value in range, or None if some value has none.

    The coefficient box starts at 3 and widens to 5 before giving up.
    """
    _require_p(g, d)
    if not 1 <= n < 18 - d:
        raise ValueError(f"need 1 <= n < {18 - d}")
    out = []
    for cg in cg_range(g, d, n):
        certs = certificates_for(g, d, n, cg, 3) or certificates_for(g, d, n, cg, 5)
        if not certs:
            return None
        out.append(certs[0])
    return out


def nmax_refined(g: int, d: int) -> tuple[int, list[ObstructionCertificate]]:
    """n_max after discarding secant degrees that are ruled out.

    Degrees above the raw value are ruled out by P_{g,d} < 0; degrees that
    the contradictory-divisor search covers for every C·Γ are lowered one by one.
    """
    _require_p(g, d)
    P = PgdPolynomial(g, d)
    n = pgd_nmax_raw(g, d)
    certs = [ObstructionCertificate(g, d, k, "polynomial_negative") for k in range(n + 1, 18 - d)]
    assert all(P(c.n) < 0 for c in certs)
    lowered = []
    while n > 0:
        if (g, d) == (1, 6) and n == 1:
            # C + L would be a (4,7) class, which only splits as a line plus a genus-4 sextic
            assert is_line_plus_elliptic_sextic(g + 3, d + 1)
            rng = cg_range(g, d, n)
            lowered.append(ObstructionCertificate(g, d, n, "special_rule_1_6", cg_range=(rng[0], rng[-1])))
            n -= 1
            continue
        found = search_contradictory_divisor(g, d, n)
        if found is None:
            break
        lowered.extend(found)
        n -= 1
    return n, sorted(lowered, key=lambda c: (c.n, c.cg or 0)) + certs


@lru_cache(maxsize=None)
def nmax(g: int, d: int) -> int:
    return nmax_refined(g, d)[0]


Tri = Literal["yes", "no", "unknown"]
Containment = Literal["hyperplane", "smooth_quadric_section", "smooth_cubic_section", "unknown"]
Verdict = Literal["weak_fano", "not_weak_fano", "insufficient_data"]


@dataclass(frozen=True)
class CurveInstance:
    g: int
    d: int
    containment: Containment = "unknown"
    has_4secant_line: Tri = "unknown"
    has_7secant_conic: Tri = "unknown"

    def __post_init__(self):
        if self.g < 0 or self.d < 1:
            raise ValueError("need g >= 0 and d >= 1")
        if self.containment not in ("hyperplane", "smooth_quadric_section", "smooth_cubic_section", "unknown"):
            raise ValueError(f"bad containment {self.containment!r}")
        for t in (self.has_4secant_line, self.has_7secant_conic):
            if t not in ("yes", "no", "unknown"):
                raise ValueError(f"bad tri-state {t!r}")


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reasons: tuple[str, ...]
    missing: tuple[str, ...] = ()
    conflicts: tuple[str, ...] = ()
    n_max: int | None = None


def _forced(c: CurveInstance) -> tuple[Verdict, str] | None:
    """Verdicts that follow from (g,d) and containment alone, whatever the secant data."""
    gd = (c.g, c.d)
    if gd in P_PLANE and gd != (0, 4):
        return "weak_fano", "pair forces a hyperplane section and every such curve gives weak Fano"
    if gd == (0, 4) and c.containment == "hyperplane":
        return "weak_fano", "(0,4) on a hyperplane section gives weak Fano"
    if c.containment == "hyperplane":
        return "not_weak_fano", "on a hyperplane section only the plane pairs give weak Fano"
    if c.containment == "smooth_quadric_section":
        if gd in (P_QUADRIC | QUADRIC_SMALL) - QUADRIC_LINE_EXCEPTIONS:
            return "weak_fano", "on a quartic del Pezzo every residual system is base-point-free"
        if gd not in P_QUADRIC | QUADRIC_SMALL:
            return "not_weak_fano", "every curve of this class on a quartic del Pezzo has a 4-secant line"
    if c.containment == "smooth_cubic_section" and gd in P_NONE:
        return "weak_fano", "no secant curve of positive degree is possible (n_max = 0)"
    return None


def classify(c: CurveInstance) -> Classification:
    gd = (c.g, c.d)
    if gd not in P_ALL:
        return Classification("not_weak_fano", (f"({c.g},{c.d}) fails the genus/degree conditions",))
    nm = nmax(c.g, c.d)
    forced = _forced(c)
    if forced is not None:
        verdict, why = forced
        conflicts = []
        if verdict == "weak_fano":
            if c.has_4secant_line == "yes":
                conflicts.append("declared 4-secant line cannot exist for this configuration")
            if c.has_7secant_conic == "yes":
                conflicts.append("declared 7-secant conic cannot exist for this configuration")
        return Classification(verdict, (why,), conflicts=tuple(conflicts), n_max=nm)

    # a declared secant of degree above n_max cannot exist; record it and carry on
    conflicts = tuple(f"declared {name} cannot exist since n_max = {nm}"
                      for name, deg, flag in (("4-secant line", 1, c.has_4secant_line),
                                              ("7-secant conic", 2, c.has_7secant_conic))
                      if flag == "yes" and deg > nm)
    if c.has_4secant_line == "yes" and nm >= 1:
        return Classification("not_weak_fano", ("a 4-secant line has negative anticanonical degree",), n_max=nm)
    if c.has_7secant_conic == "yes" and nm >= 2:
        return Classification("not_weak_fano", ("a 7-secant conic has negative anticanonical degree",), n_max=nm)

    if c.containment == "smooth_quadric_section":
        # only (0,6) and (3,8) reach here
        if c.has_4secant_line == "no":
            return Classification("weak_fano", ("quartic del Pezzo case without a 4-secant line",),
                                  n_max=nm, conflicts=conflicts)
        return Classification("insufficient_data", ("4-secant line status decides this pair",),
                              missing=("has_4secant_line",), n_max=nm, conflicts=conflicts)

    need = []
    if gd in P_LINE | P_CONIC:
        need.append("has_4secant_line")
    if gd in P_CONIC:
        need.append("has_7secant_conic")
    missing = tuple(f for f in need if getattr(c, f) == "unknown")
    if c.containment == "smooth_cubic_section":
        if not missing:
            return Classification("weak_fano", (f"smooth cubic section and all secant degrees <= {nm} excluded",),
                                  n_max=nm, conflicts=conflicts)
        return Classification("insufficient_data", (f"secant curves of degree <= {nm} must be excluded",),
                              missing=missing, n_max=nm, conflicts=conflicts)
    return Classification("insufficient_data",
                          ("containment in a smooth cubic section is required and unknown",),
                          missing=("containment",) + missing, n_max=nm, conflicts=conflicts)


@dataclass(frozen=True)
class ExistenceRow:
    g: int
    d: int
    existence: str
    low_degree: str
    n_max: int
    ok: bool


LINE_PAIRS: frozenset[Pair] = frozenset({(0, 1), (2, 5), (14, 13)})
CONIC_PAIRS: frozenset[Pair] = frozenset({(0, 2), (1, 4), (5, 8), (8, 10)})


def existence_audit() -> list[ExistenceRow]:
    rows = []
    for g, d in sorted(P_ALL, key=lambda p: (p[1], p[0])):
        ex = knutsen_smooth_quadric_existence(g, d)
        kind = detect_low_degree_curves(g, d).kind if ex == "exists_rank2" else "none"
        nm = nmax(g, d)
        ok = ex != "impossible"
        if kind == "line":
            ok = ok and (g, d) in LINE_PAIRS and nm == 0
        if kind == "conic":
            ok = ok and (g, d) in CONIC_PAIRS and nm == 0
        rows.append(ExistenceRow(g, d, ex, kind, nm, ok))
    return rows
