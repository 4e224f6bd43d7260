"""Two-point gravitational correlators of P^1 in degree two."""

from fractions import Fraction

import pytest

from stablemaps import tables
from stablemaps.correlators import (
    CORRELATOR_SPECS,
    CorrelatorMismatch,
    CorrelatorSpec,
    correlator,
    cross_check_via_localization,
    table3,
)
from stablemaps.localization import FixedPointSpace

# one-point invariants of degree-two maps to P^1:
# <tau_2 H> = 1/(2!)^2 and <tau_3 1> = -2 (1 + 1/2) / (2!)^2
ONE_POINT_H = Fraction(1, 4)
ONE_POINT_1 = -2 * (1 + Fraction(1, 2)) / 4


def test_all_sixteen_listed():
    got = {s.insertions: correlator(s) for s in CORRELATOR_SPECS}
    want = {((a, x), (b, y)): v for (a, x, b, y), v in tables.CORRELATORS.items()}
    assert got == want
    assert len(CORRELATOR_SPECS) == 16


def test_string_dilaton_divisor():
    c = lambda text: correlator(CorrelatorSpec.parse(text))  # noqa: E731
    # string: a unit insertion lowers the other level
    assert c("tau4,1") == ONE_POINT_1
    assert c("tau3H,1") == ONE_POINT_H
    # dilaton: tau1 multiplies by 2g - 2 + n = -1
    assert c("tau3,tau1") == -ONE_POINT_1
    assert c("tau2H,tau1") == -ONE_POINT_H
    # divisor: H contributes the degree plus a lowered level
    assert c("tau3,H") == 2 * ONE_POINT_1 + ONE_POINT_H
    assert c("tau2H,H") == 2 * ONE_POINT_H


def test_swap_symmetry():
    for s in CORRELATOR_SPECS:
        assert correlator(s.swapped()) == correlator(s)


def test_vanishing_cases():
    assert correlator(CorrelatorSpec.of(-1, "1", 3, "H")) == 0
    assert correlator(CorrelatorSpec.of(3, "1", 0, "1")) == 0  # wrong codimension
    assert correlator(CorrelatorSpec.of(0, "H", 0, "H")) == 0


def test_parse_and_key():
    s = CorrelatorSpec.parse("tau2H, tau1")
    assert s.insertions == ((2, "H"), (1, "1"))
    assert s.key() == "tau2H,tau1"
    assert s.integrand() == "psi1^2*H1*psi2"
    assert CorrelatorSpec.parse("H,tau3").key() == "H,tau3"
    for bad in ("tau2", "sigma2,1", "tau2K,1"):
        with pytest.raises(ValueError):
            CorrelatorSpec.parse(bad)
    with pytest.raises(ValueError):
        CorrelatorSpec.of(-2, "1", 0, "1")


@pytest.mark.parametrize("spec", CORRELATOR_SPECS, ids=lambda s: s.key())
def test_localization_cross_check(spec):
    assert cross_check_via_localization(spec) == correlator(spec)


def test_cross_check_rejects_vanishing_specs():
    with pytest.raises(ValueError):
        cross_check_via_localization(CorrelatorSpec.of(-1, "1", 3, "H"))


def test_cross_check_detects_disagreement():
    bad = {k: list(v) for k, v in tables.BOUNDARY_RESTRICTIONS_22.items()}
    bad["D0"] = ["0"] * 14
    with pytest.raises(CorrelatorMismatch):
        cross_check_via_localization(CorrelatorSpec.parse("tau4,1"), FixedPointSpace(2, 2, bad), [(3, 1)])


def test_table3_keys():
    t = table3()
    assert t["tau2,tau2"] == Fraction(5, 4)
    assert t["tau1H,tau1H"] == Fraction(1, 2)
    assert sorted(set(t.values())) == sorted({Fraction(x, 4) for x in (-5, -3, -1, 1, 2, 3, 5)})
