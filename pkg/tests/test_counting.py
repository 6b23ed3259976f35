import random

import pytest

from genfrob import (
    InputError,
    LatticeBasis,
    WeightVector,
    class_label,
    count_table,
    degree_fiber,
    dominated_points,
    fiber,
    has_nonneg_rep,
    kernel_basis,
    m_value,
)

from .oracles import class_count, count_representations, representations


def _first_reach(table, basis, k, limit):
    for d in range(limit + 1):
        if any(cnt >= k for _, cnt in table.classes_at(d)):
            return d
    raise AssertionError("not reached")


def test_count_first_reach_degrees_3_5_8():
    B = kernel_basis(WeightVector((3, 5, 8)))
    table = count_table(B, 40, 10)
    assert [_first_reach(table, B, k, 40) for k in range(1, 7)] == [0, 8, 16, 21, 24, 29]


def test_count_degree_zero():
    B = kernel_basis(WeightVector((3, 5, 8)))
    table = count_table(B, 5, 5)
    assert table.count(B.zero_class) == 1


def test_count_degree_eight_witnesses():
    B = kernel_basis(WeightVector((3, 5, 8)))
    table = count_table(B, 10, 10)
    c = class_label(B, (1, 1, 0))
    assert table.count(c) == 2
    assert fiber(B, c).points == ((0, 0, 1), (1, 1, 0))


def test_count_matches_enumeration_oracle():
    B = kernel_basis(WeightVector((3, 5, 8)))
    table = count_table(B, 30, 50)
    for d in range(31):
        (cls, cnt), = list(table.classes_at(d))
        assert cnt == count_representations((3, 5, 8), d)


def test_count_sublattice_matches_oracle():
    w = WeightVector((2, 3, 5))
    H = LatticeBasis(w, ((1, 1, -1), (8, -2, -2)))
    table = count_table(H, 15, 50)
    rng = random.Random(5)
    for _ in range(60):
        p = tuple(rng.randint(-3, 3) for _ in range(3))
        c = class_label(H, p)
        if 0 <= c.degree <= 15:
            assert table.count(c) == class_count(w.a, H.vectors, p)


def test_fiber_degree_zero():
    B = kernel_basis(WeightVector((3, 5, 8)))
    assert fiber(B, B.zero_class).points == ((0, 0, 0),)


def test_fiber_2_5_10_class_of_x3():
    B = kernel_basis(WeightVector((2, 5, 10)))
    pts = fiber(B, class_label(B, (0, 0, 1))).points
    assert set(pts) == {(5, 0, 0), (0, 2, 0), (0, 0, 1)}


def test_fiber_rejects_negative_degree():
    B = kernel_basis(WeightVector((3, 5, 8)))
    with pytest.raises(InputError):
        fiber(B, class_label(B, (-1, 0, 0)))


def test_dominated_points_known_examples():
    B = kernel_basis(WeightVector((2, 5, 10)))
    assert dominated_points(B, (0, 0, 1)) == {(0, 0, 0), (-5, 0, 1), (0, -2, 1)}
    B2 = kernel_basis(WeightVector((3, 4, 11)))
    assert dominated_points(B2, (-1, 1, 2)) == {
        (-1, -2, 1),
        (-2, -4, 2),
        (-6, -1, 2),
        (-5, 1, 1),
    }


def test_dominated_points_origin_and_negative():
    B = kernel_basis(WeightVector((3, 5, 8)))
    assert dominated_points(B, (0, 0, 0)) == {(0, 0, 0)}
    assert dominated_points(B, (-1, 0, 0)) == frozenset()


def test_m_value_examples():
    B = kernel_basis(WeightVector((3, 5, 8)))
    assert m_value(B, 3) == 16
    assert m_value(B, 1) == 0
    for a1, a2 in ((3, 5), (2, 7)):
        B2 = kernel_basis(WeightVector((a1, a2)))
        for k in range(1, 8):
            assert m_value(B2, k) == (k - 1) * a1 * a2


def test_has_nonneg_rep_examples():
    B = kernel_basis(WeightVector((3, 5, 8)))
    assert not has_nonneg_rep(B, class_label(B, (-1, 2, 0)))  # degree 7
    assert has_nonneg_rep(B, B.zero_class)
    assert has_nonneg_rep(B, class_label(B, (0, 1, 0)))  # degree 5
    assert not has_nonneg_rep(B, class_label(B, (-1, 0, 0)))  # negative degree


def test_support_identity_random():
    rng = random.Random(11)
    B = kernel_basis(WeightVector((3, 4, 11)))
    table = count_table(B, 60, 1000)
    for _ in range(150):
        p = tuple(rng.randint(-4, 4) for _ in range(3))
        d = B.weight.degree(p)
        if 0 <= d <= 60:
            assert len(dominated_points(B, p)) == table.count(class_label(B, p))


def test_window_rule_empirical():
    B = kernel_basis(WeightVector((3, 5, 8)))
    k = 3
    table = count_table(B, 60, k)
    a1 = 3
    for r in range(58):
        if all(table.fully_covered(d, k) for d in range(r, r + a1)):
            assert all(table.fully_covered(d, k) for d in range(r, 61))
            break
    else:
        raise AssertionError("no covered window found")


def test_translation_invariance_of_dominated_points():
    rng = random.Random(3)
    B = kernel_basis(WeightVector((3, 5, 8)))
    v1, v2 = B.vectors
    for _ in range(50):
        p = tuple(rng.randint(-3, 6) for _ in range(3))
        s, t = rng.randint(-2, 2), rng.randint(-2, 2)
        l = tuple(s * x + t * y for x, y in zip(v1, v2))
        shifted = dominated_points(B, tuple(x + y for x, y in zip(p, l)))
        expected = {tuple(x + y for x, y in zip(q, l)) for q in dominated_points(B, p)}
        assert shifted == expected


def test_fiber_and_count_table_cardinality_agree():
    w = WeightVector((2, 3, 5))
    H = LatticeBasis(w, ((1, 1, -1), (8, -2, -2)))
    table = count_table(H, 12, 10**6)
    for d in range(13):
        for cls, cnt in table.classes_at(d):
            assert cnt == len(fiber(H, cls).points)


def test_counts_monotone_under_generators():
    B = kernel_basis(WeightVector((3, 5, 8)))
    cap = 7
    table = count_table(B, 40, cap)
    for d in range(41):
        for cls, cnt in table.classes_at(d):
            for i, ai in enumerate(B.weight.a):
                unit = tuple(int(j == i) for j in range(3))
                prev = B.class_sub(cls, class_label(B, unit))
                if prev.degree >= 0:
                    assert cnt >= min(table.count(prev), cap) or cnt == cap
                    assert cnt >= table.count(prev) or cnt == cap


def test_cap_saturates():
    B = kernel_basis(WeightVector((3, 5, 8)))
    t1 = count_table(B, 30, 1)
    t5 = count_table(B, 30, 5)
    for d in range(31):
        for (c1, n1), (_, n5) in zip(t1.classes_at(d), t5.classes_at(d)):
            assert n1 == min(n5, 1) or (n5 == 5 and n1 == 1)


def test_degree_fiber_matches_oracle():
    B = kernel_basis(WeightVector((3, 4, 11)))
    for d in (0, 7, 15, 22):
        assert list(degree_fiber(B, d)) == representations((3, 4, 11), d)


def test_count_table_validation():
    B = kernel_basis(WeightVector((3, 5, 8)))
    with pytest.raises(InputError):
        count_table(B, -1, 1)
    with pytest.raises(InputError):
        count_table(B, 5, 0)
    table = count_table(B, 5, 1)
    with pytest.raises(InputError):
        table.count(class_label(B, (2, 0, 0)))  # degree 6 beyond range
