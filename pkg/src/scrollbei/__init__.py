"""Scroll binomial edge ideals: exact Groebner bases, Hilbert series and theorem suites."""

from __future__ import annotations

from .errors import (
    DimensionError,
    InconsistencyError,
    NotClosedError,
    ParseError,
    PreconditionError,
    ScrollError,
    SizeLimitError,
    UncertifiedError,
    ZeroInputError,
)
from .graphio import parse_graph
from .graphs import (
    LabeledGraph,
    clique_intervals,
    connected_components,
    enumerate_graphs,
    find_closed_labeling,
    is_closed_labeling,
    maximal_cliques,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminate,
    ideal_equal,
    initial_ideal,
    intersect,
    is_groebner,
    radical_membership,
    saturate,
)
from .hilbert import hilbert_numerator, hilbert_series, krull_dim_monomial, regularity_bound_check, regularity_cm
from .monomial_ideal import MonomialIdeal
from .polynomial import GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial, parse_polynomial
from .scroll import scroll_edge_ideal, scroll_full_ideal, saturation_certificate
from .suites import TheoremReport, run_suite
from .variety import variety_points, variety_union_equal

__version__ = "0.1.0"
