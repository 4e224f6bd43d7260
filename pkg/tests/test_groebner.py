"""Buchberger against sympy and against its own certificates."""

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemaps.algebra import Polynomial, parse_polynomial
from stablemaps.groebner import GroebnerBasis

VARS = ("x", "y", "z")
SX = sympy.symbols(VARS)


def gb(rels, vars_=VARS, weights=None):
    polys = [parse_polynomial(r, vars_) for r in rels]
    return GroebnerBasis.compute(polys, vars_, weights or (1,) * len(vars_))


def sympy_gb(rels):
    g = sympy.groebner([sympy.sympify(r.replace("^", "**")) for r in rels], *SX, order="grevlex", domain="QQ")
    return {sympy.expand(p) for p in g.exprs}


def as_sympy(p: Polynomial):
    return sympy.expand(sympy.sympify(p.to_string().replace("^", "**")))


def test_monomial_ideal_is_unchanged():
    g = gb(["H1^2", "H2^2"], ("H1", "H2"))
    assert g.to_strings() == ["H1^2", "H2^2"]
    assert g.standard_monomials(2) == [(1, 1)]


def test_unit_ideal():
    g = gb(["x - 1", "x"])
    assert g.is_unit_ideal()
    assert g.to_strings() == ["1"]


def test_linear_elimination():
    g = gb(["x - y", "y - z"])
    assert g.contains(parse_polynomial("x - z", VARS))
    assert g.reduce(parse_polynomial("x^2", VARS)) == parse_polynomial("z^2", VARS)


def test_weighted_standard_monomials():
    # P of weight 2 is a single standard monomial in degree 2 next to x^2
    g = gb(["x^3"], ("x", "P"), (1, 2))
    assert sorted(g.standard_monomials(2)) == [(0, 1), (2, 0)]


def test_known_basis_matches_sympy():
    rels = ["x^2 - y*z", "x*y - z^2", "x*z - y^2"]
    assert {as_sympy(p) for p in gb(rels).basis} == sympy_gb(rels)


small_coeff = st.integers(-3, 3)
mono = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
poly_text = st.lists(st.tuples(small_coeff, mono), min_size=1, max_size=3).map(
    lambda ts: " + ".join(f"({c})*x^{a}*y^{b}*z^{e}" for c, (a, b, e) in ts)
)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_text, min_size=1, max_size=3))
def test_reduced_basis_matches_sympy(rels):
    polys = [parse_polynomial(r, VARS) for r in rels]
    if all(p.is_zero() for p in polys):
        return
    rels = [r for r, p in zip(rels, polys) if not p.is_zero()]
    mine = gb(rels)
    assert mine.is_reduced()
    assert mine.s_pairs_reduce_to_zero()
    assert {as_sympy(p) for p in mine.basis} == sympy_gb(rels)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_text, min_size=1, max_size=3), poly_text)
def test_reduction_is_idempotent_and_generators_reduce_to_zero(rels, f):
    g = gb(rels)
    r = g.reduce(parse_polynomial(f, VARS))
    assert g.reduce(r) == r
    for p in rels:
        assert g.contains(parse_polynomial(p, VARS))
