"""Generalised Frobenius numbers and sequence analytics.

F_k is the largest weighted degree at which some quotient class still
has fewer than k nonnegative representatives. Both computations here
run off the counting tables; the brute-force variant is a plain upward
scan kept independent of the bounded pipeline scan it validates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .counting import CountTable, m_value
from .lattice import InputError, LatticeBasis


def _window_scan(basis: LatticeBasis, k: int) -> int:
    """Scan degrees upward until a1 consecutive degrees are fully covered.

    Sound because counts are monotone under adding the first generator:
    count(c, d) >= count(c - [e1], d - a1).
    """
    a1 = basis.weight.a[0]
    bound = 4 * a1
    while True:
        table = CountTable(basis, bound, k)
        last_bad = -1
        run = 0
        for d in range(bound + 1):
            if table.fully_covered(d, k):
                run += 1
                if run == a1:
                    return last_bad
            else:
                last_bad = d
                run = 0
        bound *= 2


def brute_force_frobenius(basis: LatticeBasis, k: int) -> int:
    """Independent oracle: pure counting scan, no degree bound assumed."""
    if k < 1:
        raise InputError("k must be at least 1")
    return _window_scan(basis, k)


def frobenius(basis: LatticeBasis, k: int, degree_cap: int | None = None) -> int:
    """Largest degree with some class count below k, or -1 if none.

    For k >= 2 the scan is bounded by m_k + F_1 plus one window, which
    the structure theory guarantees is enough; the trailing window is
    verified to be fully covered and a violation raises.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    f1 = _window_scan(basis, 1)
    if k == 1 and degree_cap is None:
        return f1
    a1 = basis.weight.a[0]
    mk = m_value(basis, k)
    cap = degree_cap if degree_cap is not None else mk + max(f1, 0) + a1
    table = CountTable(basis, cap, k)
    last_bad = -1
    for d in range(cap + 1):
        if not table.fully_covered(d, k):
            last_bad = d
    if last_bad > cap - a1:
        raise InputError(
            f"degree cap {cap} too small: degree {last_bad} still uncovered"
        )
    if last_bad > mk + max(f1, 0):
        raise RuntimeError(
            f"scan found uncovered degree {last_bad} above m_k + F_1 bound"
        )
    return last_bad


@dataclass(frozen=True)
class FrobeniusReport:
    """Sequence analytics for F_k and m_k up to k_max."""

    k_max: int
    f_values: tuple[int, ...]
    m_values: tuple[int, ...]
    b_values: tuple[int, ...]
    f_diffs: tuple[int, ...]
    m_diffs: tuple[int, ...]
    dimension: int
    bound_checks: dict


def sequence_report(basis: LatticeBasis, k_max: int) -> FrobeniusReport:
    """F/m/b sequences with the progression bounds checked.

    The set of observed b-values is a lower slice of the full b-set, so
    the dimension bounds are reported against the values seen up to
    k_max only.
    """
    if k_max < 2:
        raise InputError("k_max must be at least 2")
    f_values = tuple(frobenius(basis, k) for k in range(1, k_max + 1))
    m_values = tuple(m_value(basis, k) for k in range(1, k_max + 1))
    b_values = tuple(f - m for f, m in zip(f_values, m_values))
    f_diffs = tuple(f_values[i + 1] - f_values[i] for i in range(k_max - 1))
    m_diffs = tuple(m_values[i + 1] - m_values[i] for i in range(k_max - 1))
    dimension = len(set(f_diffs))
    m2 = m_values[1]
    f1 = f_values[0]
    b_sorted = sorted(set(b_values))
    b_lo, b_hi = b_sorted[0], b_sorted[-1]
    t = len(b_sorted)
    checks = {
        "m_nondecreasing": all(d >= 0 for d in m_diffs),
        "m_diffs_at_most_m2": all(d <= m2 for d in m_diffs),
        "f_between_bounds": all(
            m - 1 <= f <= m + max(f1, -1) for f, m in zip(f_values, m_values)
        ),
        "dimension_le_t_times_m2_plus_1": dimension <= t * (m2 + 1),
        "dimension_le_m2_plus_b_spread_plus_1": dimension <= m2 + b_hi - b_lo + 1,
        "f_diffs_bounded": all(abs(d) <= m2 + b_hi - b_lo for d in f_diffs),
    }
    return FrobeniusReport(
        k_max=k_max,
        f_values=f_values,
        m_values=m_values,
        b_values=b_values,
        f_diffs=f_diffs,
        m_diffs=m_diffs,
        dimension=dimension,
        bound_checks=checks,
    )
