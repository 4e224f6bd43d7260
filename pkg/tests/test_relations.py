"""Relations found from the pairing matrix, and the assembled presentation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemaps.algebra import monomials_of_degree, Polynomial, parse_polynomial
from stablemaps.relations import (
    ROW_ORDER,
    assemble_presentation,
    candidate_monomials,
    coefficient_constraints,
    default_multipliers,
    left_nullspace,
    nullspace,
    pairing_matrix,
    reduce_to_candidates,
    relation_space,
    verify_named_relations,
)
from stablemaps.rings import QuotientRing, get_ring


def _m(text):
    return parse_polynomial(text, ROW_ORDER)


def test_degree_one_relation():
    rs = relation_space(pairing_matrix(1))
    assert rs.basis == ((2, 2, -4, -1, 1),)
    assert rs.to_strings() == ["2*H1 + 2*H2 - 4*D0 - D1 + D2"]


def test_degree_one_constraints_from_four_multipliers():
    cols = [_m(t) for t in ("D2^2*H1", "D2^2*H2", "D1*D0*H1", "D1*H1*H2")]
    m = pairing_matrix(1, multipliers=cols)
    assert coefficient_constraints(m) == ["2b - 4e=0", "2a - 4e=0", "-c + 4d=0", "2d + 2e=0"]
    # these four already cut out the relation
    assert relation_space(m).basis == ((2, 2, -4, -1, 1),)


def test_pairing_entries():
    m = pairing_matrix(1)
    assert m.entry("D2", "D2^2*H1") == -4
    assert m.entry("H2", "D2^2*H1") == 2
    assert m.shape == (5, 35)


def test_degree_two_relation():
    m = pairing_matrix(2)
    assert m.rank() == 6
    rs = relation_space(m)
    assert rs.basis == ((0, 1, 0, 0, 4, -4, 0),)
    assert rs.to_strings() == ["-4*H1*D0 + 4*D0^2 + D0*D1"]


def test_degree_two_without_lower_reductions():
    # all ten monomials in H1, H2, D0, D1: H1^2, H2^2, D0*(H1 - H2) and the relation above
    rows = [Polynomial.monomial(ROW_ORDER, e + (0,)) for e in monomials_of_degree(4, 2)]
    m = pairing_matrix(2, rows=rows)
    rs = relation_space(m)
    assert len(rows) == 10 and rs.dimension == 4
    for text in ("H1^2", "H2^2", "D0*H1 - D0*H2", "D1*D0 + 4*D0^2 - 4*D0*H1"):
        v = [_m(text).coefficient(r) for r in rows]
        assert rs.contains(v), text


def test_degree_three_space():
    rs = relation_space(pairing_matrix(3))
    assert rs.basis == ((1, 0, 0, -6, 32, -96), (0, 1, 1, -4, -8, -8))


def test_named_cubic_relations():
    report = verify_named_relations()
    assert report["ok"] and report["independent"] and report["span_nullspace"]
    vectors = {r.name: r.vector for r in report["relations"]}
    assert vectors["(D1+D2)^3"] == (8, -24, -24, 48, 448, -576)
    assert vectors["D1*psi1*psi2"] == (Fraction(1, 4), -1, -1, Fraction(5, 2), 16, -16)


def test_reduce_to_candidates_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        reduce_to_candidates(parse_polynomial("x*D1^2", ("x", "D1")))


def test_candidate_degrees():
    assert [len(candidate_monomials(k)) for k in (1, 2, 3)] == [5, 7, 6]
    with pytest.raises(ValueError):
        candidate_monomials(4)
    assert len(default_multipliers(1)) == 35


def test_bad_multiplier_degree():
    with pytest.raises(ValueError):
        pairing_matrix(1, multipliers=[_m("D1^2")])


def test_degree_one_pairing_is_transpose_of_degree_three():
    a = pairing_matrix(1, multipliers=candidate_monomials(3))
    b = pairing_matrix(3, multipliers=candidate_monomials(1))
    assert a.entries == tuple(zip(*b.entries))


def test_assembled_presentation_matches_registry():
    ring = QuotientRing(assemble_presentation())
    assert ring.graded_dimensions(5) == [1, 4, 6, 4, 1, 0]
    assert ring.gb.basis == get_ring().gb.basis


def test_discovered_relations_lie_in_registry_ideal():
    ring = get_ring()
    for k in (1, 2, 3):
        for p in relation_space(pairing_matrix(k)).polynomials():
            assert ring.contains(p), p


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_nullspace_rank_nullity(m):
    ncols = len(m[0])
    basis = nullspace(m)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in m)
    left = left_nullspace(m)
    for y in left:
        assert all(sum(y[i] * m[i][j] for i in range(len(m))) == 0 for j in range(ncols))
    # row rank equals column rank
    assert ncols - len(basis) == len(m) - len(left)
