"""Exact integer intersection theory on small Picard lattices.

A lattice is a Gram matrix plus a polarization H and a canonical class K.
Classes are immutable integer vectors tied to their lattice; every binary
operation checks that both operands live in the same lattice.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

# Coordinates in this package stay far below this; crossing it means a bug.
_INT64_MAX = 2**63 - 1


def _checked(x: int) -> int:
    if not -_INT64_MAX - 1 <= x <= _INT64_MAX:
        raise OverflowError(f"intersection value {x} leaves the int64 range")
    return x


class LatticeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionLattice:
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]
    h_coords: tuple[int, ...]
    k_coords: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        r = len(self.gram)
        if any(len(row) != r for row in self.gram):
            raise ValueError("gram must be square")
        for i in range(r):
            for j in range(r):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram must be symmetric")
        if len(self.basis_labels) != r or len(self.h_coords) != r or len(self.k_coords) != r:
            raise ValueError("labels, H and K must match the rank")
        if self.H.square() <= 0:
            raise ValueError("polarization must have positive square")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def H(self) -> DivisorClass:
        return DivisorClass(self.h_coords, self)

    @property
    def K(self) -> DivisorClass:
        return DivisorClass(self.k_coords, self)

    def cls(self, *coords: int) -> DivisorClass:
        return DivisorClass(tuple(int(c) for c in coords), self)

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank, self)

    def basis(self) -> list[DivisorClass]:
        return [self.cls(*(int(i == j) for j in range(self.rank))) for i in range(self.rank)]

    def form(self, v: Sequence[int], w: Sequence[int]) -> int:
        return _checked(sum(v[i] * self.gram[i][j] * w[j]
                            for i in range(self.rank) for j in range(self.rank)))


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[int, ...]
    lattice: IntersectionLattice = field(repr=False, compare=True)

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise ValueError("coordinate length differs from lattice rank")

    def _same(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise LatticeMismatch(f"{self.lattice.name!r} vs {other.lattice.name!r}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(tuple(_checked(a + b) for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(tuple(_checked(a - b) for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coords), self.lattice)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(tuple(_checked(k * a) for a in self.coords), self.lattice)

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        self._same(other)
        return self.lattice.form(self.coords, other.coords)

    def square(self) -> int:
        return self.lattice.form(self.coords, self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def label(self) -> str:
        """Human readable form like ``2H-C-2Γ``."""
        parts = []
        for c, name in zip(self.coords, self.lattice.basis_labels):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}{name}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def intersect(D: DivisorClass, D2: DivisorClass) -> int:
    return D.dot(D2)


def genus(D: DivisorClass) -> int:
    """Arithmetic genus ½·D·(D+K)+1; odd D·(D+K) is a malformed lattice."""
    t = D.dot(D + D.lattice.K)
    if t % 2:
        raise ValueError(f"D·(D+K) = {t} is odd; lattice is malformed")
    return t // 2 + 1


def union_genus(D: DivisorClass, D2: DivisorClass) -> int:
    return genus(D) + genus(D2) + D.dot(D2) - 1


def degree(D: DivisorClass) -> int:
    return D.lattice.H.dot(D)


def make_k3_rank1() -> IntersectionLattice:
    return IntersectionLattice(((6,),), ("H",), (1,), (0,), "k3-rank1")


def make_k3_rank2(g: int, d: int) -> IntersectionLattice:
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    return IntersectionLattice(((6, d), (d, 2 * g - 2)), ("H", "C"), (1, 0), (0, 0),
                               f"k3-rank2({g},{d})")


def make_k3_rank3(g: int, d: int, n: int, cg: int) -> IntersectionLattice:
    if g < 0 or d < 1 or n < 1 or cg < 0:
        raise ValueError("need g >= 0, d >= 1, n >= 1, cg >= 0")
    gram = ((6, d, n), (d, 2 * g - 2, cg), (n, cg, -2))
    return IntersectionLattice(gram, ("H", "C", "Γ"), (1, 0, 0), (0, 0, 0),
                               f"k3-rank3({g},{d},{n},{cg})")


def make_quadric_smooth() -> IntersectionLattice:
    return IntersectionLattice(((0, 1), (1, 0)), ("f1", "f2"), (1, 1), (-2, -2), "P1xP1")


def make_f2() -> IntersectionLattice:
    return IntersectionLattice(((-2, 1), (1, 0)), ("e", "f"), (1, 2), (-2, -4), "F2")


def make_dp4() -> IntersectionLattice:
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(6)) for i in range(6))
    return IntersectionLattice(gram, ("L", "E1", "E2", "E3", "E4", "E5"),
                               (3, -1, -1, -1, -1, -1), (-3, 1, 1, 1, 1, 1), "dP4")


def dp4_class(k: int, m: Sequence[int]) -> DivisorClass:
    """Λ(k; m1..m5) = kL - Σ m_i E_i."""
    return make_dp4().cls(k, *(-x for x in m))


def dp4_lines() -> list[DivisorClass]:
    """The 16 lines: E_i, L-E_i-E_j, 2L-ΣE."""
    S = make_dp4()
    out = [S.cls(*(0 if j != i + 1 else 1 for j in range(6))) for i in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            m = [0] * 5
            m[i] = m[j] = 1
            out.append(dp4_class(1, m))
    out.append(dp4_class(2, [1] * 5))
    return out


def parse_class(text: str, lattice: IntersectionLattice) -> DivisorClass:
    """Inverse of DivisorClass.label, e.g. ``2H-C-2Γ``."""
    text = text.replace(" ", "")
    if text == "0":
        return lattice.zero()
    names = "|".join(re.escape(b) for b in sorted(lattice.basis_labels, key=len, reverse=True))
    coords = [0] * lattice.rank
    pos = 0
    for m in re.finditer(rf"([+-]?)(\d*)({names})", text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        sign, mag, name = m.groups()
        coords[lattice.basis_labels.index(name)] += (-1 if sign == "-" else 1) * int(mag or 1)
    if pos != len(text):
        raise ValueError(f"cannot parse {text!r}")
    return lattice.cls(*coords)
