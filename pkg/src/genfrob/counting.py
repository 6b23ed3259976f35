"""Class-graded counting of nonnegative representations.

Unbounded-knapsack dynamic programming over (torsion, degree) gives the
number of points of N^n in each quotient class, saturated at a cap.
Fibers and dominated-point sets are enumerated directly; this module is
the independent brute-force oracle for everything downstream.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import InputError, LatticeBasis, QuotientClass, vsub


@dataclass(frozen=True)
class Fiber:
    """All nonnegative integer points in one quotient class."""

    label: QuotientClass
    points: tuple[tuple[int, ...], ...]


class CountTable:
    """Saturating counts of nonnegative representatives per class.

    counts[c] = min(#{u in N^n with label u = c}, cap) for every class c
    of degree 0..max_degree.
    """

    def __init__(self, basis: LatticeBasis, max_degree: int, cap: int):
        if max_degree < 0:
            raise InputError("max_degree must be nonnegative")
        if cap < 1:
            raise InputError("cap must be at least 1")
        self.basis = basis
        self.weight = basis.weight
        self.max_degree = max_degree
        self.cap = cap
        moduli = basis.torsion_moduli
        self._moduli = moduli
        size = 1
        for m in moduli:
            size *= m
        self._tsize = size
        rows = [[0] * size for _ in range(max_degree + 1)]
        rows[0][0] = 1
        n = basis.n
        for i in range(n):
            ai = self.weight.a[i]
            unit = tuple(int(j == i) for j in range(n))
            ti = basis.torsion(unit)
            shift = [
                self._code(
                    tuple((t - x) % m for t, x, m in zip(self._decode(code), ti, moduli))
                )
                for code in range(size)
            ]
            for d in range(ai, max_degree + 1):
                prev = rows[d - ai]
                cur = rows[d]
                for code in range(size):
                    p = prev[shift[code]]
                    if p:
                        s = cur[code] + p
                        cur[code] = s if s < cap else cap
        self._rows = rows

    def _code(self, torsion) -> int:
        code = 0
        for t, m in zip(torsion, self._moduli):
            code = code * m + t
        return code

    def _decode(self, code) -> tuple[int, ...]:
        out = []
        for m in reversed(self._moduli):
            out.append(code % m)
            code //= m
        return tuple(reversed(out))

    def count(self, c: QuotientClass) -> int:
        """Saturated count for class c; 0 below degree 0."""
        if c.degree < 0:
            return 0
        if c.degree > self.max_degree:
            raise InputError(
                f"degree {c.degree} beyond table range {self.max_degree}"
            )
        return self._rows[c.degree][self._code(c.torsion)]

    def classes_at(self, degree: int):
        """All classes of the given degree, with their saturated counts."""
        row = self._rows[degree]
        for code in range(self._tsize):
            yield QuotientClass(degree, self._decode(code)), row[code]

    def fully_covered(self, degree: int, k: int) -> bool:
        """True when every class of this degree has count >= k."""
        return all(c >= k for c in self._rows[degree])

    @property
    def counts(self) -> dict[QuotientClass, int]:
        out = {}
        for d in range(self.max_degree + 1):
            for cls, cnt in self.classes_at(d):
                out[cls] = cnt
        return out


def count_table(basis: LatticeBasis, max_degree: int, cap: int) -> CountTable:
    return CountTable(basis, max_degree, cap)


def degree_fiber(basis: LatticeBasis, degree: int) -> tuple[tuple[int, ...], ...]:
    """All points of N^n with the given weighted degree, sorted."""
    a = basis.weight.a
    n = basis.n
    out = []
    point = [0] * n

    def rec(i, rem):
        if i == n - 1:
            if rem % a[i] == 0:
                point[i] = rem // a[i]
                out.append(tuple(point))
            return
        for x in range(rem // a[i] + 1):
            point[i] = x
            rec(i + 1, rem - x * a[i])
        point[i] = 0

    if degree >= 0:
        rec(0, degree)
    return tuple(sorted(out))


def fiber(basis: LatticeBasis, c: QuotientClass) -> Fiber:
    """Complete enumeration of the nonnegative points in class c."""
    if c.degree < 0:
        raise InputError("fiber degree must be nonnegative")
    pts = tuple(
        u for u in degree_fiber(basis, c.degree) if basis.torsion(u) == c.torsion
    )
    return Fiber(c, pts)


def dominated_points(basis: LatticeBasis, p) -> frozenset:
    """Sublattice points coordinatewise below p.

    These are p - u over the fiber of p's class; empty when the weighted
    degree of p is negative.
    """
    if basis.weight.degree(p) < 0:
        return frozenset()
    return frozenset(vsub(p, u) for u in fiber(basis, basis.label(p)).points)


def m_value(basis: LatticeBasis, k: int) -> int:
    """Smallest degree at which some class has count >= k."""
    if k < 1:
        raise InputError("k must be at least 1")
    bound = 16
    while True:
        table = CountTable(basis, bound, k)
        for d in range(bound + 1):
            if any(cnt >= k for _, cnt in table.classes_at(d)):
                return d
        bound *= 2


def has_nonneg_rep(basis: LatticeBasis, c: QuotientClass, table: CountTable | None = None) -> bool:
    """True when class c contains a point of N^n."""
    if c.degree < 0:
        return False
    if table is not None and c.degree <= table.max_degree:
        return table.count(c) >= 1
    return CountTable(basis, c.degree, 1).count(c) >= 1
