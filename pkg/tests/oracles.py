"""Independent brute-force oracles for the test suite.

Everything here enumerates nonnegative integer vectors directly and
solves small linear systems over the rationals. No dynamic programming,
no Groebner bases, no imports from the package: expected values frozen
in the tests were produced by these functions.
"""
from fractions import Fraction


def representations(a, degree):
    """All u in N^n with a . u == degree, by plain recursion."""
    n = len(a)
    out = []

    def rec(i, rem, cur):
        if i == n - 1:
            if rem % a[i] == 0:
                out.append(tuple(cur) + (rem // a[i],))
            return
        x = 0
        while x * a[i] <= rem:
            rec(i + 1, rem - x * a[i], cur + [x])
            x += 1

    if degree >= 0:
        rec(0, degree, [])
    return sorted(out)


def count_representations(a, degree):
    return len(representations(a, degree))


def in_span(vectors, v):
    """Integer membership in the span of the vectors, by rational solve."""
    rows = [list(w) for w in vectors]
    m = len(rows)
    n = len(v)
    A = [[Fraction(rows[i][j]) for i in range(m)] for j in range(n)]
    b = [Fraction(x) for x in v]
    coeffs = [None] * m
    pivot_rows = []
    for col in range(m):
        pivot = next(
            (r for r in range(len(A)) if r not in pivot_rows and A[r][col] != 0), None
        )
        if pivot is None:
            return False
        pivot_rows.append(pivot)
        for r in range(n):
            if r != pivot and A[r][col] != 0:
                factor = A[r][col] / A[pivot][col]
                for c in range(m):
                    A[r][c] -= factor * A[pivot][c]
                b[r] -= factor * b[pivot]
    for col, pivot in enumerate(pivot_rows):
        coeffs[col] = b[pivot] / A[pivot][col]
    for r in range(n):
        if r in pivot_rows:
            continue
        if sum(A[r][c] * coeffs[c] for c in range(m)) != b[r]:
            return False
    return all(c.denominator == 1 for c in coeffs)


def class_count(a, basis_vectors, p):
    """Number of nonnegative points congruent to p modulo the sublattice."""
    degree = sum(x * y for x, y in zip(a, p))
    return sum(
        1
        for u in representations(a, degree)
        if in_span(basis_vectors, tuple(x - y for x, y in zip(p, u)))
    )


def frobenius_by_enumeration(a, k, scan_limit):
    """Largest degree whose count stays below k, scanning to a limit.

    The caller must pass a limit beyond which full coverage is certain;
    the trailing min(a) degrees of the scan are required to be covered.
    """
    last_bad = -1
    for d in range(scan_limit + 1):
        if count_representations(a, d) < k:
            last_bad = d
    assert all(
        count_representations(a, d) >= k
        for d in range(scan_limit - min(a) + 1, scan_limit + 1)
    ), "scan limit too small for a trustworthy answer"
    return last_bad


def m_by_enumeration(a, k, scan_limit):
    for d in range(scan_limit + 1):
        if count_representations(a, d) >= k:
            return d
    raise AssertionError("scan limit too small")
