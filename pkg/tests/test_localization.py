"""Torus-fixed loci, Euler classes, restrictions and residue sums."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemaps import tables
from stablemaps.algebra import Polynomial, parse_polynomial
from stablemaps.localization import (
    DEFAULT_POINTS,
    DIVISOR_SYMBOLS,
    FixedPointSpace,
    LocalizationError,
    aut_order,
    degree4_monomials,
    enumerate_graphs,
    forced_zero,
    localize_integral,
    parse_class,
    parse_graph,
    parse_points,
    points_from_env,
    space,
    validate_boundary_table,
    validate_hyperplanes,
)
from stablemaps.ratfunc import RationalFunction
from stablemaps.rings import get_ring

COUNTS = {(0, 1): 1, (1, 1): 2, (2, 1): 4, (3, 1): 8, (0, 2): 3, (1, 2): 6, (2, 2): 14, (3, 2): 36}


@pytest.mark.parametrize("nd", sorted(COUNTS))
def test_component_counts(nd):
    assert len(enumerate_graphs(*nd)) == COUNTS[nd]


def test_order_follows_reference_list():
    names = [c.graph.describe() for c in space(2, 2).components]
    assert [parse_graph(s).signature() for s in tables.FIXED_GRAPHS_22] == [
        parse_graph(s).signature() for s in names
    ]


@pytest.mark.parametrize(
    "text, order",
    [
        ("0{1,2} -2- 1", 2),
        ("0{1} -2- 1{2}", 2),
        ("1 -1- 0{1,2} -1- 1", 2),
        ("1{1} -1- 0 -1- 1{2}", 1),
        ("1 -1- 0{2} -1- 1{1}", 1),
        ("0 -1- 1 -1- 0", 2),
        ("0 -2- 1", 2),
    ],
)
def test_automorphisms(text, order):
    # a double cover contributes 2, as does swapping two unmarked legs
    assert aut_order(parse_graph(text)) == order


def test_graph_validation():
    with pytest.raises(ValueError):
        parse_graph("0{1} -1- 0{2}")  # adjacent vertices must have different colours
    with pytest.raises(ValueError):
        parse_graph("0{1} -1- 1{1}")


def test_euler_classes_listed():
    fs = space(2, 2)
    for idx, text in tables.EULER_CLASSES_22.items():
        assert fs.euler(fs.component(idx)) == parse_class(text), idx


def test_one_dimensional_components():
    fs = space(2, 2)
    assert [c.index for c in fs.components if c.moduli_dimension == 1] == [11, 12]
    assert fs.restrict("psi1", fs.component(11)) == parse_class("psi")
    # three special points: psi vanishes; two: minus the edge weight
    assert fs.restrict("psi1", fs.component(3)) == parse_class("0")
    assert fs.restrict("psi1", fs.component(1)) == parse_class("-1/2*l0 + 1/2*l1")


def test_restrictions_match_table():
    fs = space(2, 2)
    for sym, column in tables.HYPERPLANE_RESTRICTIONS_22.items():
        for c, text in zip(fs.components, column):
            assert fs.restrict(sym, c) == parse_class(text), (sym, c.name)


def test_node_smoothing_reproduces_boundary_table():
    assert validate_boundary_table() == []
    assert validate_boundary_table(include_psi=True) == []
    assert validate_hyperplanes() == []


def test_worked_example_residues():
    fs = space(2, 2)
    p = parse_polynomial(tables.WORKED_EXAMPLE, fs.symbols())
    for c in fs.components:
        want = tables.WORKED_EXAMPLE_SUMMANDS.get(c.index)
        got = fs.summand(p, c)
        assert got == (RationalFunction(*want) if want else RationalFunction(0)), c.name
    assert fs.integrate(p, symbolic=True) == 2


@pytest.mark.parametrize("mono, value", sorted(tables.DEGREE4_INTEGRALS.items()))
def test_listed_integrals(mono, value):
    assert localize_integral(mono) == value


def test_forced_zeros_vanish_by_localization():
    zeros = [m for m in degree4_monomials() if forced_zero(m)]
    assert len(zeros) == 32 and len(degree4_monomials()) == 70
    for m in zeros:
        assert localize_integral(m) == 0


def test_symbolic_and_point_modes_agree():
    for m in degree4_monomials()[::7]:
        assert localize_integral(m, symbolic=True) == localize_integral(m)


def test_mirror_symmetry():
    # swapping the two fixed points maps components to components and l0 <-> l1
    fs = space(2, 2)
    by_sig = {c.graph.signature(): c for c in fs.components}
    for c in fs.components:
        m = by_sig[c.graph.mirror().signature()]
        assert m.aut_order == c.aut_order
        assert fs.euler(m) == fs.euler(c).swap_weights()
        for s in ("H1", "H2", "psi1", "psi2"):
            assert fs.restrict(s, m) == fs.restrict(s, c).swap_weights()


def test_three_pointed_lines_agree_with_ring():
    fs, ring = space(3, 1), get_ring("M03P11")
    psis = {"psi1": "H2 + H3 - D", "psi2": "H1 + H3 - D", "psi3": "H1 + H2 - D"}
    assert fs.integrate("H1*H2*H3") == 1
    for combo in itertools.combinations_with_replacement(fs.symbols(), 3):
        text = "*".join(combo)
        want = ring.integrate(parse_polynomial(text, ring.variables + tuple(psis)).subs(psis).with_variables(ring.variables))
        assert fs.integrate(text) == want, text


def test_one_pointed_conics_agree_with_ring():
    fs, ring = space(1, 2), get_ring("M01P12")
    for combo in itertools.combinations_with_replacement(("D", "H1", "psi1"), 3):
        text = "*".join(combo)
        assert fs.integrate(text) == ring.integrate(text), text
    assert fs.integrate("D^2*H1") == 4
    assert fs.integrate("psi1^3") == Fraction(-3, 4)


def test_one_pointed_psi_relation_restricts_to_a_constant():
    fs = space(1, 2)
    p = parse_polynomial("psi1 - 1/4*D + H1", fs.symbols())
    for c in fs.components:
        assert fs.restrict_polynomial(p, c) == parse_class("1/2*l0 + 1/2*l1")


def test_lower_degree_integrand_is_zero():
    assert localize_integral("D1^3") == 0


def test_unsupported_space():
    with pytest.raises(ValueError, match="unsupported"):
        FixedPointSpace(4, 2)


def test_corrupted_table_is_not_weight_independent():
    bad = {k: list(v) for k, v in tables.BOUNDARY_RESTRICTIONS_22.items()}
    bad["D1"][0] = "l0"
    fs = FixedPointSpace(2, 2, bad)
    assert validate_boundary_table(fs)
    with pytest.raises(LocalizationError):
        for m in degree4_monomials():
            fs.integrate(m, points=[(3, 1), (5, 2), (7, -3)])


def test_parse_points():
    assert parse_points("3,1; 5,2") == [(3, 1), (5, 2)]
    assert parse_points("1/2,3;4,-1") == [(Fraction(1, 2), 3), (4, -1)]
    for bad in ("3,3;5,2", "3,1", "3,1;3,1", "x,1;2,3"):
        with pytest.raises(ValueError):
            parse_points(bad)


def test_points_from_env(monkeypatch):
    monkeypatch.delenv("STABLEMAPS_EVAL_POINTS", raising=False)
    assert points_from_env() == list(DEFAULT_POINTS)
    monkeypatch.setenv("STABLEMAPS_EVAL_POINTS", "2,7;9,4")
    assert points_from_env() == [(2, 7), (9, 4)]


weights = st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(lambda t: t[0] != t[1])


@settings(max_examples=15, deadline=None)
@given(weights, st.sampled_from(degree4_monomials()))
def test_value_is_weight_independent(pt, m):
    assert localize_integral(m, points=[pt]) == get_ring().integrate(m.with_variables(DIVISOR_SYMBOLS))


def test_random_points_in_bulk():
    rng = random.Random(7)
    pts = [(rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(3)]
    pts = [p for p in pts if p[0] != p[1]] + [(3, 1)]
    for m in degree4_monomials()[::5]:
        assert localize_integral(m, points=pts) == localize_integral(m)


def test_polynomial_input():
    m = Polynomial.monomial(DIVISOR_SYMBOLS, (0, 1, 1, 1, 1))
    assert localize_integral(m) == 2
