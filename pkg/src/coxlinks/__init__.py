"""Coxeter systems, chord-diagram links, growth series and Salem/Mahler
computations.

The library is organized around exact integer arithmetic (polynomials,
bilinear forms, Seifert matrices) with certified numeric root analysis on
top; see the README for the capability tour and the demos directory for
narrative walkthroughs.
"""

from .chords import (
    ChordDiagram,
    IntersectionMatrix,
    ObstructionWitness,
    OrderedChordSystem,
    PositiveOrderingClass,
    diagram_from_json,
    diagram_from_text,
    diagram_to_json,
    diagram_to_text,
    enumerate_positive_orderings,
    incidence_graph,
    intersection_matrix,
    is_positive,
    make_positive,
    obstruction,
    realize,
)
from .coxeter import (
    BilinearForm,
    Classification,
    CoxeterGraph,
    DirectedCoxeterGraph,
    Ordering,
    affine_d,
    affine_e,
    bilinear_form,
    char_poly_coxeter,
    classify,
    coxeter_element,
    cycle,
    d_series,
    directed_graph,
    e_series,
    family,
    graph_from_json,
    graph_to_json,
    path,
    reflection_matrix,
    spectral_radius,
    star,
    triangle_with_tail,
)
from .errors import (
    AmbiguityError,
    ConvergenceError,
    CoxlinksError,
    DomainError,
    InconclusiveError,
    InvariantViolationError,
    ParseError,
    PositivityError,
    UnsupportedError,
)
from .growth import (
    GrowthRate,
    TupleSignature,
    bracket,
    delta,
    excess,
    growth_rate,
    orbifold_chi,
)
from .intpoly import (
    LEHMER_POLYNOMIAL,
    IntPolynomial,
    RootSet,
    find_roots,
    is_cyclotomic_product,
    is_reciprocal,
    is_salem,
    mahler_measure,
    parse_poly,
    poly_csv,
    poly_from_json,
    poly_text,
    poly_to_json,
)
from .search import (
    SearchReport,
    enumerate_trees,
    min_mahler_delta,
    min_positive_excess,
    min_spectral_radius,
    ordering_invariance_scan,
)
from .seifert import (
    MonodromyMatrix,
    SeifertMatrix,
    alexander,
    coxeter_from_link,
    monodromy,
    pretzel_alexander,
    seifert_matrix,
)

__version__ = "0.1.0"
