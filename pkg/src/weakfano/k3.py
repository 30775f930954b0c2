"""Numerical facts about curves on a smooth sextic K3 surface S in a quadric threefold."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod
from typing import Literal

from .lattice import DivisorClass, degree, make_k3_rank2


@dataclass(frozen=True)
class GenusBound:
    d: int
    r: int
    value: int


def genus_bound_B(d: int) -> GenusBound:
    """Sharp genus bound for reduced degree-d curves that are not complete intersections."""
    if d < 1:
        raise ValueError("d must be positive")
    r = d % 6
    if r > 3:
        r -= 6
    if r == 0:
        value = d * d // 12 - 1
    else:
        assert (d * d - r * r) % 12 == 0
        value = (d * d - r * r) // 12
    return GenusBound(d, r, value)


def ci_genus(degrees: list[int], n: int) -> int:
    """Arithmetic genus of a complete intersection curve of the given degrees in P^n."""
    if not degrees:
        raise ValueError("need at least one degree")
    if len(degrees) != n - 1:
        raise ValueError(f"a curve in P^{n} needs {n - 1} degrees, got {len(degrees)}")
    t = prod(degrees) * (sum(degrees) - n - 1)
    assert t % 2 == 0
    return t // 2 + 1


@dataclass(frozen=True)
class Effectivity:
    kind: Literal["effective_curve", "zero", "inconclusive"]
    degree: int | None = None
    genus: int | None = None


def effectivity_test(D: DivisorClass) -> Effectivity:
    """Riemann-Roch style test on a K3: D² > -4 forces D or -D effective."""
    if any(D.lattice.k_coords):
        raise ValueError("effectivity test needs a K3 lattice (K = 0)")
    hd, sq = degree(D), D.square()
    if sq > -4 and hd > 0:
        return Effectivity("effective_curve", hd, sq // 2 + 1)
    if sq > -4 and hd == 0:
        return Effectivity("zero")
    return Effectivity("inconclusive")


def low_degree_genus_cap(deg: int) -> int:
    """Curves of degree at most 3 on S have arithmetic genus at most 0."""
    if deg not in (1, 2, 3):
        raise ValueError("degree must be 1, 2 or 3")
    return 0


Existence = Literal["complete_intersection", "exists_rank2", "impossible"]


def knutsen_smooth_quadric_existence(g: int, d: int) -> Existence:
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    if 12 * g == d * d + 12:
        return "complete_intersection"
    if 12 * g <= d * d - 1 and (g, d) != (4, 7):
        return "exists_rank2"
    return "impossible"


def is_line_plus_elliptic_sextic(g: int, d: int) -> bool:
    """(4,7) is the one pair below the bound that only splits as a line plus a sextic genus-4 curve."""
    return (g, d) == (4, 7)


@dataclass(frozen=True)
class LowDegreeCurveReport:
    kind: Literal["line", "conic", "rational_cubic", "none"]
    classes: tuple[DivisorClass, ...] = field(default=())
    candidate: bool = False


def detect_low_degree_curves(g: int, d: int) -> LowDegreeCurveReport:
    """Closed-form detection of (-2)-classes of degree 1, 2, 3 in Pic = ZH ⊕ ZC.

    Only the line case is an equivalence; conics and cubics are reported as
    candidates whose geometric existence is not decided numerically.
    """
    if knutsen_smooth_quadric_existence(g, d) != "exists_rank2":
        raise ValueError(f"({g},{d}) does not give a rank-2 K3 lattice")
    S = make_k3_rank2(g, d)
    r = d % 6

    def build(x: int, bs: tuple[int, ...]) -> tuple[DivisorClass, ...]:
        out = []
        for b in bs:
            a, rem = divmod(x - d * b, 6)
            assert rem == 0
            D = S.cls(a, b)
            assert degree(D) == x and D.square() == -2
            out.append(D)
        return tuple(out)

    if r in (1, 5) and 12 * g == d * d - 1:
        return LowDegreeCurveReport("line", build(1, (1 if r == 1 else -1,)))
    if r in (2, 4) and 12 * g == d * d - 4:
        return LowDegreeCurveReport("conic", build(2, (1 if r == 2 else -1,)), True)
    if r == 3 and 12 * g == d * d - 9:
        return LowDegreeCurveReport("rational_cubic", build(3, (1, -1)), True)
    return LowDegreeCurveReport("none")


def linear_system_dim_lower_bound(g: int, d: int, e: int, n: int) -> int:
    """Lower bound on dim |O(e)| restricted to hypersurfaces containing a (g,d) curve in P^n."""
    if g < 0 or d < 1 or e < 1 or n < 1:
        raise ValueError("need g >= 0, d, e, n >= 1")
    base = comb(n + e, e) - 2
    if 2 * g - 2 < e * d:
        return base + g - e * d
    return base + min(g - e * d, (-e * d) // 2)
