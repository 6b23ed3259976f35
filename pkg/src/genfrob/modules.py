"""Generalised lattice modules: minimal generators and classification.

A Laurent monomial belongs to the k-th module when its exponent
dominates at least k sublattice points. Candidate generators come from
least common multiples of k ball points around the origin; they are
minimalised under divisibility up to the lattice action and reduced to
one canonical representative per orbit. The inductive classification
splits each generator into an exceptional carry-over, the image of a
syzygy between two generators, or the image of a syzygy with the unit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .counting import CountTable, dominated_points, has_nonneg_rep, m_value
from .frobenius import brute_force_frobenius
from .ideal import MarkovBasis, lattice_ideal
from .lattice import InputError, LatticeBasis, QuotientClass, dot, vsub
from .neighbourhood import Ball, ball, moves

EXCEPTIONAL = "Exceptional"
SYZYGY_OF_TWO_GENERATORS = "SyzygyOfTwoGenerators"
SYZYGY_WITH_UNIT = "SyzygyWithUnit"


def render_monomial(exponent) -> str:
    """Text form like x1^-1*x2*x3^2; the unit monomial renders as 1."""
    parts = []
    for i, e in enumerate(exponent, start=1):
        if e == 0:
            continue
        parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> tuple[int, ...]:
    """Inverse of render_monomial for n variables."""
    exponent = [0] * n
    text = text.strip()
    if text == "1":
        return tuple(exponent)
    for part in text.split("*"):
        m = re.fullmatch(r"x(\d+)(?:\^(-?\d+))?", part.strip())
        if not m:
            raise InputError(f"cannot parse monomial factor {part!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise InputError(f"variable x{i} out of range for n={n}")
        exponent[i - 1] += int(m.group(2)) if m.group(2) else 1
    return tuple(exponent)


def phi(g1, g2) -> tuple[int, ...]:
    """Multidegree of the syzygy between two monomials: their lcm."""
    return tuple(max(x, y) for x, y in zip(g1, g2))


def divides_mod_L(basis: LatticeBasis, m, m2, table: CountTable | None = None) -> bool:
    """True when some lattice translate of m is coordinatewise below m2."""
    c = basis.label(vsub(m2, m))
    return has_nonneg_rep(basis, c, table)


def candidate_lcms(bl: Ball, k: int, weight, degree_cap: int) -> tuple[tuple[int, ...], ...]:
    """lcms of the k-subsets of the ball that contain the origin.

    Subsets whose partial lcm already exceeds the degree cap are pruned;
    the lcm degree only grows as points are added.
    """
    if bl.radius != k - 1:
        raise InputError(f"need a ball of radius {k - 1}, got {bl.radius}")
    n = len(bl.points[0])
    others = [p for p in bl.points if any(p)]
    if len(others) < k - 1:
        raise InputError(f"ball has too few points for {k}-subsets")
    zero = (0,) * n
    found = set()

    def rec(start, chosen, lcm):
        if chosen == k - 1:
            found.add(lcm)
            return
        for idx in range(start, len(others) - (k - 2 - chosen)):
            p = others[idx]
            nxt = tuple(max(x, y) for x, y in zip(lcm, p))
            if dot(weight.a, nxt) > degree_cap:
                continue
            rec(idx + 1, chosen + 1, nxt)

    rec(0, 0, zero)
    return tuple(sorted(found))


@dataclass(frozen=True)
class ModuleGens:
    """Minimal generating data of the k-th module, one orbit per entry.

    Representatives are the lexicographically smallest translates that
    put a dominated point at the origin; supports hold the dominated
    lattice points of each representative.
    """

    k: int
    generators: tuple[tuple[int, ...], ...]
    supports: tuple[tuple[tuple[int, ...], ...], ...]
    classes: tuple[QuotientClass, ...]
    min_degree_witness: tuple[int, ...]
    m_k: int
    f_1: int

    def render(self) -> tuple[str, ...]:
        return tuple(render_monomial(g) for g in self.generators)


def _canonical_rep(basis: LatticeBasis, g):
    support = sorted(dominated_points(basis, g))
    rep = min(vsub(g, u) for u in support)
    return rep, tuple(sorted(dominated_points(basis, rep)))


def minimal_generators(
    basis: LatticeBasis,
    k: int,
    markov: MarkovBasis | None = None,
) -> ModuleGens:
    """Canonical orbit representatives of the k-th module's generators."""
    if k < 1:
        raise InputError("k must be at least 1")
    if markov is None:
        markov = lattice_ideal(basis)
    mk = m_value(basis, k)
    f1 = brute_force_frobenius(basis, 1)
    cap = mk + max(f1, 0)
    bl = ball(moves(markov), k - 1)
    cands = candidate_lcms(bl, k, basis.weight, cap)
    table = CountTable(basis, cap, max(k, 2))
    orbits: dict[QuotientClass, tuple[int, ...]] = {}
    for g in cands:
        orbits.setdefault(basis.label(g), g)
    kept = []
    for cls, g in orbits.items():
        divisible = False
        for cls2 in orbits:
            if cls2 == cls:
                continue
            diff = basis.class_sub(cls, cls2)
            if diff.degree < 0:
                continue
            if table.count(diff) >= 1:
                divisible = True
                break
        if not divisible:
            kept.append(g)
    reps = []
    for g in kept:
        rep, support = _canonical_rep(basis, g)
        reps.append((dot(basis.weight.a, rep), rep, support))
    reps.sort()
    generators = tuple(r[1] for r in reps)
    supports = tuple(r[2] for r in reps)
    classes = tuple(basis.label(g) for g in generators)
    if not generators or reps[0][0] != mk:
        raise RuntimeError("no generator found at the minimum degree")
    return ModuleGens(
        k=k,
        generators=generators,
        supports=supports,
        classes=classes,
        min_degree_witness=generators[0],
        m_k=mk,
        f_1=f1,
    )


def modified_min_gens(
    basis: LatticeBasis,
    k: int,
    gens: ModuleGens | None = None,
    markov: MarkovBasis | None = None,
) -> tuple[tuple[int, ...], ...]:
    """Unit plus generator translates that do not dominate the origin.

    The full set of such translates is infinite; the returned slice
    shifts each non-unit generator orbit by the lattice points of the
    radius-k ball and keeps the shifts that fail to dominate the origin.
    """
    if markov is None:
        markov = lattice_ideal(basis)
    if gens is None:
        gens = minimal_generators(basis, k, markov)
    n = basis.n
    unit = (0,) * n
    out = {unit}
    bl = ball(moves(markov), k)
    for g in gens.generators:
        if g == unit:
            continue
        for l in bl.points:
            shifted = tuple(x + y for x, y in zip(g, l))
            if any(e < 0 for e in shifted):
                out.add(shifted)
    return tuple(sorted(out))


@dataclass(frozen=True)
class GeneratorClassification:
    """Inductive case of one minimal generator, with its certificates."""

    case: str
    witnesses: tuple[tuple[int, ...], ...]


def is_exceptional(basis: LatticeBasis, g, k: int) -> bool:
    """Generator of the k-th module dominating strictly more than k points."""
    return len(dominated_points(basis, g)) > k


def classify(
    basis: LatticeBasis,
    g,
    k_next: int,
    gens: ModuleGens | None = None,
) -> GeneratorClassification:
    """Case analysis of a minimal generator of the k_next-th module.

    Looks at the lcms of the (k_next - 1)-subsets of the dominated
    points: all equal means the generator was already an exceptional
    generator one level down; an incomparable pair exhibits it as the
    image of a syzygy between two lower generators; otherwise the unique
    proper-divisor lcm certifies a syzygy with the unit.
    """
    if k_next < 2:
        raise InputError("classification needs k_next at least 2")
    support = sorted(dominated_points(basis, g))
    if len(support) < k_next:
        raise InputError(
            f"{render_monomial(g)} dominates {len(support)} points, "
            f"not a member of the module for k={k_next}"
        )
    if gens is None:
        gens = minimal_generators(basis, k_next)
    cls = basis.label(g)
    for other in gens.classes:
        if other == cls:
            continue
        diff = basis.class_sub(cls, other)
        if has_nonneg_rep(basis, diff):
            raise InputError(f"{render_monomial(g)} is not a minimal generator")
    if cls not in gens.classes:
        raise InputError(f"{render_monomial(g)} is not a minimal generator")

    lcms = set()
    for T in combinations(support, k_next - 1):
        lcm = T[0]
        for p in T[1:]:
            lcm = phi(lcm, p)
        lcms.add(lcm)
    lcms = sorted(lcms)
    if len(lcms) == 1:
        if lcms[0] != g:
            raise RuntimeError("constant subset lcm differs from the generator")
        return GeneratorClassification(EXCEPTIONAL, ())
    for l1, l2 in combinations(lcms, 2):
        le12 = all(x <= y for x, y in zip(l1, l2))
        le21 = all(y <= x for x, y in zip(l1, l2))
        if not le12 and not le21:
            return GeneratorClassification(SYZYGY_OF_TWO_GENERATORS, (l1, l2))
    proper = [l for l in lcms if l != g]
    if len(proper) != 1:
        raise RuntimeError("expected a unique proper-divisor subset lcm")
    return GeneratorClassification(SYZYGY_WITH_UNIT, (proper[0],))
