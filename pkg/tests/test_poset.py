import pytest

from genfrob import (
    InputError,
    LatticeBasis,
    QuotientClass,
    WeightVector,
    finiteness_report,
    kernel_basis,
    leq,
    max_antichain_size,
    minimal_generators,
    module_poset,
    poset_to_dot,
    structure_poset,
)

KNOWN_HASSE_EDGES = {(0, 3), (3, 6), (0, 5), (1, 4), (4, 7), (1, 6), (2, 5), (2, 7)}


def test_structure_poset_3_5_8_matches_known_diagram():
    sp = structure_poset(kernel_basis(WeightVector((3, 5, 8))))
    assert [c.degree for c in sp.elements] == list(range(8))
    assert {(u.degree, v.degree) for u, v in sp.covers} == KNOWN_HASSE_EDGES


def test_structure_poset_2_3_two_incomparable_elements():
    sp = structure_poset(kernel_basis(WeightVector((2, 3))))
    assert [c.degree for c in sp.elements] == [0, 1]
    assert sp.covers == ()


def test_leq_examples():
    sp = structure_poset(kernel_basis(WeightVector((3, 5, 8))))
    zero = QuotientClass(0, ())
    assert leq(sp, zero, QuotientClass(3, ()))
    assert leq(sp, QuotientClass(4, ()), QuotientClass(4, ()))
    assert not leq(sp, zero, QuotientClass(1, ()))


def test_leq_rejects_classes_outside_window():
    sp = structure_poset(kernel_basis(WeightVector((3, 5, 8))))
    with pytest.raises(InputError):
        leq(sp, QuotientClass(0, ()), QuotientClass(9, ()))


def test_structure_poset_empty_when_f1_negative():
    sp = structure_poset(kernel_basis(WeightVector((1, 2))))
    assert sp.f1 == -1
    assert sp.elements == ()


def test_module_poset_labels_3_5_8():
    B = kernel_basis(WeightVector((3, 5, 8)))
    expected = {
        1: {0, 3, 5, 6},
        2: {0, 3, 5, 6, 7},
        3: {0, 2, 3, 4, 5, 6, 7},
        4: {0, 2, 3, 4, 5, 6, 7},
        5: {0, 2, 3, 4, 5, 6, 7},
        6: set(range(8)),
    }
    for k, labels in expected.items():
        mp = module_poset(B, k)
        assert {c.degree for c in mp.labels} == labels


def test_module_poset_k2_minimal_elements_match_generators():
    B = kernel_basis(WeightVector((3, 5, 8)))
    mp = module_poset(B, 2)
    assert {c.degree for c in mp.minimal_elements} == {0, 7}
    gens = minimal_generators(B, 2)
    assert len(gens.generators) == len(mp.minimal_elements)


def test_module_poset_k6_is_full():
    B = kernel_basis(WeightVector((3, 5, 8)))
    sp = structure_poset(B)
    mp = module_poset(B, 6)
    assert mp.labels == frozenset(sp.elements)


def test_minimal_elements_match_generator_orbits():
    for a, ks in (((3, 5, 8), (1, 2, 3, 4)), ((3, 4, 11), (1, 2, 3, 4))):
        B = kernel_basis(WeightVector(a))
        for k in ks:
            assert len(module_poset(B, k).minimal_elements) == len(
                minimal_generators(B, k).generators
            )


def test_equal_degree_classes_incomparable():
    w = WeightVector((2, 3, 5))
    H = LatticeBasis(w, ((1, 1, -1), (8, -2, -2)))
    sp = structure_poset(H)
    for x in sp.elements:
        for y in sp.elements:
            if x != y and x.degree == y.degree:
                assert not sp.leq(x, y)
                assert not sp.leq(y, x)


def test_sublattice_poset_size():
    w = WeightVector((2, 3, 5))
    H = LatticeBasis(w, ((1, 1, -1), (8, -2, -2)))
    sp = structure_poset(H)
    assert len(sp.elements) == H.index * (sp.f1 + 1)


def test_finiteness_report_3_5_8():
    rep = finiteness_report(kernel_basis(WeightVector((3, 5, 8))), 6)
    assert len(rep.distinct_label_sets) == 4
    assert rep.b_values == (7, 4, 1, 1, 1, -1)
    assert rep.full_poset_ks == (6,)


def test_finiteness_report_two_variable():
    rep = finiteness_report(kernel_basis(WeightVector((3, 5))), 5)
    assert len(rep.distinct_label_sets) == 1
    assert rep.b_values == (7,) * 5


def test_antichain_bound_on_generator_count():
    for a in ((3, 5, 8), (3, 4, 11)):
        B = kernel_basis(WeightVector(a))
        sp = structure_poset(B)
        bound = max_antichain_size(sp)
        for k in (1, 2, 3, 4):
            assert len(minimal_generators(B, k).generators) <= bound


def test_module_posets_label_sets_determine_relations():
    # equal label sets induce identical cover relations
    B = kernel_basis(WeightVector((3, 5, 8)))
    seen = {}
    for k in range(1, 7):
        mp = module_poset(B, k)
        if mp.labels in seen:
            assert seen[mp.labels] == mp.covers
        else:
            seen[mp.labels] = mp.covers


def test_b_values_agree_across_reports():
    from genfrob import sequence_report

    for a in ((3, 5, 8), (3, 4, 11)):
        B = kernel_basis(WeightVector(a))
        fin = finiteness_report(B, 5)
        seq = sequence_report(B, 5)
        assert fin.b_values == seq.b_values


def test_poset_to_dot():
    sp = structure_poset(kernel_basis(WeightVector((3, 5, 8))))
    dot = poset_to_dot(sp)
    assert dot.startswith("digraph hasse {")
    assert '"0" -> "3";' in dot
    assert dot.count("->") == 8
