"""End-to-end checks on proper finite-index sublattices.

The torsion machinery only shows up off the saturated kernel, so these
pin one index-2 and one index-3 case through every pipeline stage.
"""
from genfrob import (
    LatticeBasis,
    WeightVector,
    brute_force_frobenius,
    class_label,
    classify,
    finiteness_report,
    frobenius,
    kernel_basis,
    m_value,
    minimal_generators,
    module_poset,
    structure_poset,
    sublattice_index,
)


def test_index_two_sublattice_full_pipeline():
    H = LatticeBasis(WeightVector((1, 1)), ((2, -2),))
    assert sublattice_index(H) == 2
    assert brute_force_frobenius(H, 1) == 0
    assert m_value(H, 2) == 2

    g2 = minimal_generators(H, 2)
    assert g2.render() == ("x2^2",)
    assert g2.supports == (((-2, 2), (0, 0)),)
    g3 = minimal_generators(H, 3)
    assert g3.m_k == 4
    assert g3.render() == ("x2^4",)

    sp = structure_poset(H)
    assert len(sp.elements) == sublattice_index(H) * (sp.f1 + 1)
    assert sp.covers == ()  # the two degree-0 classes are incomparable

    mp2 = module_poset(H, 2)
    assert len(mp2.minimal_elements) == len(g2.generators)
    assert {(c.degree, c.torsion) for c in mp2.min_degree_classes} == {(2, (0,))}

    rep = finiteness_report(H, 4)
    assert rep.b_values == (0, 0, 0, 0)
    # the torsion class without nonnegative points keeps the poset from
    # ever filling up, so b never reaches -1
    assert rep.full_poset_ks == ()


def test_index_three_sublattice_pipeline_consistency():
    w = WeightVector((2, 3, 5))
    K = kernel_basis(w)
    H = LatticeBasis(w, (K.vectors[0], tuple(3 * x for x in K.vectors[1])))
    assert sublattice_index(H) == 3
    assert brute_force_frobenius(H, 1) == 11

    g2 = minimal_generators(H, 2)
    assert g2.m_k == 6
    assert [w.degree(g) for g in g2.generators] == [6]
    assert len(module_poset(H, 2).minimal_elements) == len(g2.generators)
    for k in range(1, 4):
        assert frobenius(H, k) == brute_force_frobenius(H, k)


def test_sublattice_classification_runs():
    H = LatticeBasis(WeightVector((1, 1)), ((2, -2),))
    g2 = minimal_generators(H, 2)
    out = classify(H, g2.generators[0], 2)
    assert out.case in {"Exceptional", "SyzygyOfTwoGenerators", "SyzygyWithUnit"}
    # the generator x2^2 dominates exactly the two points of its support
    assert class_label(H, g2.generators[0]).degree == 2
