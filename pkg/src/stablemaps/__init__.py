"""Exact intersection theory on two-pointed degree-two stable maps to P^1.

Submodules:

* :mod:`~stablemaps.algebra` and :mod:`~stablemaps.ratfunc`: polynomials over Q,
  rational functions in the torus weights, and the psi^2 = 0 extension.
* :mod:`~stablemaps.groebner` and :mod:`~stablemaps.rings`: Groebner bases,
  graded quotient rings, integration, ring maps, built-in presentations.
* :mod:`~stablemaps.localization`: fixed graphs, Euler classes, residue sums.
* :mod:`~stablemaps.relations`: relations from the exact Poincare pairing.
* :mod:`~stablemaps.correlators`: two-point descendant invariants.
"""

from .algebra import Polynomial, Rational, format_rational, parse_polynomial, poly_arith
from .correlators import CorrelatorSpec, correlator, cross_check_via_localization, table3
from .groebner import GroebnerBasis
from .localization import (
    FixedComponent,
    FixedGraph,
    FixedPointSpace,
    aut_order,
    enumerate_graphs,
    euler_class,
    integrate_component,
    localize_integral,
    restrict,
    table2,
)
from .ratfunc import EquivariantClass, RationalFunction, eval_at_point, nilpotent_inverse, ratfunc_arith
from .relations import (
    assemble_presentation,
    candidate_monomials,
    nullspace,
    pairing_matrix,
    relation_space,
    verify_named_relations,
)
from .rings import (
    QuotientRing,
    RingElement,
    RingHomomorphism,
    RingPresentation,
    apply_hom,
    buchberger,
    get_ring,
    graded_dimension,
    integrate_ring,
    normal_form,
    registry,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "Rational", "format_rational", "parse_polynomial", "poly_arith",
    "RationalFunction", "EquivariantClass", "ratfunc_arith", "nilpotent_inverse", "eval_at_point",
    "GroebnerBasis", "RingPresentation", "QuotientRing", "RingElement", "RingHomomorphism",
    "buchberger", "normal_form", "graded_dimension", "integrate_ring", "apply_hom", "registry", "get_ring",
    "FixedGraph", "FixedComponent", "FixedPointSpace", "enumerate_graphs", "aut_order", "euler_class",
    "restrict", "integrate_component", "localize_integral", "table2",
    "candidate_monomials", "pairing_matrix", "nullspace", "relation_space", "verify_named_relations",
    "assemble_presentation",
    "CorrelatorSpec", "correlator", "cross_check_via_localization", "table3",
]
