"""Curves on the low-degree surfaces of a quadric threefold.

Smooth quadric surface (P1xP1), quadric cone (through its resolution F2) and the
quartic del Pezzo surface (P2 blown up in five points).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .lattice import (DivisorClass, IntersectionLattice, degree, dp4_class, dp4_lines, genus,
                      make_dp4, make_f2, make_quadric_smooth)


@dataclass(frozen=True)
class SmoothQuadricCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or (self.a, self.b) == (0, 0):
            raise ValueError("need a, b >= 0, not both zero")

    @property
    def degree(self) -> int:
        return self.a + self.b

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1)

    def cls(self) -> DivisorClass:
        return make_quadric_smooth().cls(self.a, self.b)


@dataclass(frozen=True)
class ConeCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b not in (0, 1) or (self.a, self.b) == (0, 0):
            raise ValueError("need a >= 0, b in {0,1}, not both zero")

    @property
    def through_vertex(self) -> bool:
        return self.b == 1

    @property
    def degree(self) -> int:
        return 2 * self.a + self.b

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.a - 1 + self.b)

    def cls(self) -> DivisorClass:
        """Strict transform a·e + (2a+b)·f on F2."""
        return make_f2().cls(self.a, 2 * self.a + self.b)


def enumerate_smooth_quadric_curves(max_degree: int) -> list[tuple[SmoothQuadricCurve, int, int]]:
    """Irreducible curves a·f1 + b·f2 up to symmetry (a >= b).

    Classes with b = 0 are unions of disjoint lines unless a = 1, so they are dropped.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    out = []
    for d in range(1, max_degree + 1):
        for b in range(0, d // 2 + 1):
            c = SmoothQuadricCurve(d - b, b)
            if b == 0 and c.a != 1:
                continue
            out.append((c, c.genus, c.degree))
    return out


def enumerate_cone_curves(max_degree: int) -> list[tuple[ConeCurve, int, int]]:
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    out = []
    for d in range(1, max_degree + 1):
        b = d % 2
        c = ConeCurve((d - b) // 2, b)
        out.append((c, c.genus, c.degree))
    return out


def vertex_multiplicity(curve: ConeCurve) -> int:
    e = make_f2().cls(1, 0)
    return curve.cls().dot(e)


def cone_secant_count(curve: ConeCurve, other: ConeCurve) -> int:
    """Number of intersection points of `other` with `curve` on the cone, vertex included."""
    return curve.cls().dot(other.cls()) + vertex_multiplicity(curve) * vertex_multiplicity(other)


def residual_system_f2(curve: ConeCurve) -> DivisorClass:
    F = make_f2()
    return (F.cls(2, 6) if curve.through_vertex else F.cls(3, 6)) - curve.cls()


# base-point-free alphabet ---------------------------------------------------

def lambda_label(k: int, m) -> str:
    return f"Λ({k};{','.join(map(str, m))})"


@dataclass(frozen=True)
class Generator:
    label: str
    cls: DivisorClass


@lru_cache(maxsize=None)
def bpf_alphabet(lattice: IntersectionLattice) -> tuple[Generator, ...]:
    if lattice == make_f2():
        return (Generator("|f|", lattice.cls(0, 1)), Generator("|e+2f|", lattice.cls(1, 2)))
    if lattice == make_quadric_smooth():
        return (Generator("|f1|", lattice.cls(1, 0)), Generator("|f2|", lattice.cls(0, 1)))
    if lattice == make_dp4():
        ms: list[tuple[int, tuple[int, ...]]] = [(1, (0,) * 5), (2, (0,) * 5)]
        ms += [(2, tuple(0 if j == i else 1 for j in range(5))) for i in range(5)]
        ms += [(3, (1,) * 5)]
        ms += [(3, tuple(2 if j == i else 1 for j in range(5))) for i in range(5)]
        return tuple(Generator(lambda_label(k, m), dp4_class(k, m)) for k, m in ms)
    raise ValueError(f"no base-point-free alphabet for lattice {lattice.name!r}")


@dataclass(frozen=True)
class BpfDecomposition:
    summands: tuple[str, ...]
    target: DivisorClass

    def text(self) -> str:
        if not self.summands:
            return "0"
        return " + ".join(self.summands)


def bpf_decompositions(target: DivisorClass, max_terms: int = 4) -> list[BpfDecomposition]:
    """Every multiset of at most max_terms generators summing to target, fewest terms first."""
    gens = bpf_alphabet(target.lattice)
    out = []
    for r in range(0, max_terms + 1):
        for combo in itertools.combinations_with_replacement(range(len(gens)), r):
            s = target.lattice.zero()
            for i in combo:
                s = s + gens[i].cls
            if s == target:
                out.append(BpfDecomposition(tuple(gens[i].label for i in combo), target))
    return out


def bpf_decompose(target: DivisorClass, max_terms: int = 4) -> BpfDecomposition | None:
    found = bpf_decompositions(target, max_terms)
    return found[0] if found else None


def generator_sum(labels, lattice: IntersectionLattice) -> DivisorClass:
    by_label = {g.label: g.cls for g in bpf_alphabet(lattice)}
    s = lattice.zero()
    for lab in labels:
        s = s + by_label[lab]
    return s


# quartic del Pezzo ----------------------------------------------------------

@dataclass(frozen=True)
class DP4Curve:
    k: int
    m: tuple[int, int, int, int, int]

    def __post_init__(self):
        if self.k < 1 or len(self.m) != 5 or any(x < 0 for x in self.m):
            raise ValueError("need k >= 1 and five nonnegative multiplicities")
        if list(self.m) != sorted(self.m):
            raise ValueError("multiplicities must be sorted ascending")

    @property
    def degree(self) -> int:
        return 3 * self.k - sum(self.m)

    @property
    def genus(self) -> int:
        return (self.k - 1) * (self.k - 2) // 2 - sum(x * (x - 1) // 2 for x in self.m)

    def admissible(self) -> bool:
        return self.k >= sum(self.m[2:]) and self.degree >= 1 and self.genus >= 0

    def cls(self) -> DivisorClass:
        return dp4_class(self.k, self.m)

    def residual(self) -> DivisorClass:
        """Class of 3H - C, the restriction of -K_X to the surface."""
        S = make_dp4()
        return 3 * S.H - self.cls()


def _dp4_grid(kmax: int, mmax: int):
    for k in range(1, kmax + 1):
        for m in itertools.combinations_with_replacement(range(mmax + 1), 5):
            c = DP4Curve(k, m)
            if c.admissible():
                yield c


def enumerate_dp4_curves(pairs) -> list[tuple[DP4Curve, int, int]]:
    """All (k, m) realizing each requested (g, d).

    Degree d = 3k - Σm together with k >= m3+m4+m5 gives d >= 4k/3, so k <= d.
    """
    out = []
    for g, d in pairs:
        for c in _dp4_grid(d, d):
            if (c.genus, c.degree) == (g, d):
                out.append((c, g, d))
    return out


def dp4_secant_line_profile(curve: DP4Curve | DivisorClass) -> list[int]:
    C = curve.cls() if isinstance(curve, DP4Curve) else curve
    return [C.dot(l) for l in dp4_lines()]


def dp4_enumerate_weak_fano_pairs() -> set[tuple[int, int]]:
    """(g,d) of dP4 curves meeting each of the 16 lines at most 3 times.

    The bound 2k - Σm <= 3 with m_i <= 3 caps k at 9.
    """
    out = {(0, 1)}  # the lines themselves
    for c in _dp4_grid(9, 3):
        if max(dp4_secant_line_profile(c)) <= 3:
            out.add((c.genus, c.degree))
    return out


def fixed_line_witness(residual: DivisorClass, curve: DivisorClass) -> DivisorClass | None:
    """A line meeting the curve 4 times and the residual negatively, i.e. a fixed component."""
    for l in dp4_lines():
        if l.dot(curve) >= 4 and l.dot(residual) < 0:
            return l
    return None


def closed_form_agrees(D: DivisorClass, g: int, d: int) -> bool:
    return genus(D) == g and degree(D) == d
