"""Generalised Frobenius numbers and lattice-module analytics.

Exact integer computation of k-th Frobenius numbers, lattice ideals and
Markov bases, generalised lattice modules, and structure posets for
finite-index sublattices of a weighted kernel lattice.
"""

from .counting import (
    CountTable,
    Fiber,
    count_table,
    degree_fiber,
    dominated_points,
    fiber,
    has_nonneg_rep,
    m_value,
)
from .frobenius import FrobeniusReport, brute_force_frobenius, frobenius, sequence_report
from .ideal import (
    Binomial,
    FiberGraph,
    MarkovBasis,
    TermOrder,
    buchberger,
    fiber_graph,
    ideal_equal,
    lattice_ideal,
)
from .lattice import (
    InputError,
    LatticeBasis,
    QuotientClass,
    WeightVector,
    class_label,
    kernel_basis,
    member,
    sublattice_index,
)
from .modules import (
    EXCEPTIONAL,
    SYZYGY_OF_TWO_GENERATORS,
    SYZYGY_WITH_UNIT,
    GeneratorClassification,
    ModuleGens,
    candidate_lcms,
    classify,
    divides_mod_L,
    is_exceptional,
    minimal_generators,
    modified_min_gens,
    parse_monomial,
    phi,
    render_monomial,
)
from .neighbourhood import Ball, MoveSet, ball, distance, moves
from .poset import (
    FinitenessReport,
    ModulePoset,
    StructurePoset,
    finiteness_report,
    leq,
    max_antichain_size,
    module_poset,
    poset_to_dot,
    structure_poset,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "Binomial",
    "CountTable",
    "EXCEPTIONAL",
    "Fiber",
    "FiberGraph",
    "FinitenessReport",
    "FrobeniusReport",
    "GeneratorClassification",
    "InputError",
    "LatticeBasis",
    "MarkovBasis",
    "ModuleGens",
    "ModulePoset",
    "MoveSet",
    "QuotientClass",
    "StructurePoset",
    "SYZYGY_OF_TWO_GENERATORS",
    "SYZYGY_WITH_UNIT",
    "TermOrder",
    "WeightVector",
    "ball",
    "brute_force_frobenius",
    "buchberger",
    "candidate_lcms",
    "class_label",
    "classify",
    "count_table",
    "degree_fiber",
    "distance",
    "divides_mod_L",
    "dominated_points",
    "fiber",
    "fiber_graph",
    "finiteness_report",
    "frobenius",
    "has_nonneg_rep",
    "ideal_equal",
    "is_exceptional",
    "kernel_basis",
    "lattice_ideal",
    "leq",
    "m_value",
    "max_antichain_size",
    "member",
    "minimal_generators",
    "modified_min_gens",
    "module_poset",
    "moves",
    "parse_monomial",
    "phi",
    "poset_to_dot",
    "render_monomial",
    "sequence_report",
    "structure_poset",
    "sublattice_index",
]
