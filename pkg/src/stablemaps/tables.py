"""Reference data for two-pointed conics, embedded as plain strings.

Everything here is a literal: the localization engine either recomputes each
entry (fixed graphs, Euler classes, hyperplane restrictions, integrals) or,
for boundary-divisor restrictions, serves the strings as the source of truth
and checks them against an independent node-smoothing rule.

Weights are written ``l0``, ``l1``; the nilpotent class on one-dimensional
fixed components is ``psi``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

# Fixed graphs of M_{0,2}(P^1, 2) in their standard order. Notation: a vertex
# is its fixed point index with an optional mark set, edges are ``-d-``.
FIXED_GRAPHS_22: Tuple[str, ...] = (
    "0{1} -2- 1{2}",
    "0{2} -2- 1{1}",
    "0{1,2} -2- 1",
    "0 -2- 1{1,2}",
    "1{1,2} -1- 0 -1- 1",
    "0{1,2} -1- 1 -1- 0",
    "1{1} -1- 0{2} -1- 1",
    "0{1} -1- 1{2} -1- 0",
    "1{2} -1- 0{1} -1- 1",
    "0{2} -1- 1{1} -1- 0",
    "1 -1- 0{1,2} -1- 1",
    "0 -1- 1{1,2} -1- 0",
    "1{1} -1- 0 -1- 1{2}",
    "0{1} -1- 1 -1- 0{2}",
)

# Boundary-divisor restrictions to the fixed components Z1..Z14.
BOUNDARY_RESTRICTIONS_22: Dict[str, Tuple[str, ...]] = {
    "D0": (
        "0", "0", "(l0 - l1)/2", "(l1 - l0)/2", "l1 - l0", "l0 - l1", "0",
        "0", "0", "0", "psi", "psi", "0", "0",
    ),
    "D1": (
        "0", "0", "0", "0", "2*(l0 - l1)", "2*(l1 - l0)", "l0 - l1",
        "l1 - l0", "l0 - l1", "l1 - l0", "2*l0 - 2*l1 - 2*psi", "2*l1 - 2*l0 - 2*psi", "0", "0",
    ),
    "D2": (
        "0", "0", "0", "0", "0", "0", "l0 - l1",
        "l1 - l0", "l0 - l1", "l1 - l0", "2*psi", "2*psi", "2*(l0 - l1)", "2*(l1 - l0)",
    ),
}

# Hyperplane restrictions, used only to check the values read off the graphs.
HYPERPLANE_RESTRICTIONS_22: Dict[str, Tuple[str, ...]] = {
    "H1": ("l0", "l1", "l0", "l1", "l1", "l0", "l1", "l0", "l0", "l1", "l0", "l1", "l1", "l0"),
    "H2": ("l1", "l0", "l0", "l1", "l1", "l0", "l0", "l1", "l1", "l0", "l0", "l1", "l1", "l0"),
}

# Equivariant Euler classes of the normal bundles, components 3..14.
EULER_CLASSES_22: Dict[int, str] = {
    3: "-(l1 - l0)^4/4",
    4: "-(l1 - l0)^4/4",
    5: "2*(l1 - l0)^4",
    6: "2*(l1 - l0)^4",
    7: "-(l0 - l1)^4",
    8: "-(l0 - l1)^4",
    9: "-(l0 - l1)^4",
    10: "-(l0 - l1)^4",
    11: "(l0 - l1)^2*(l0 - l1 - 2*psi)",
    12: "(l1 - l0)^2*(l1 - l0 - 2*psi)",
    13: "2*(l0 - l1)^4",
    14: "2*(l0 - l1)^4",
}

# The 38 degree-four integrals not killed by a factor H_i^2 or H1*H2*D0.
DEGREE4_INTEGRALS: Dict[str, Fraction] = {
    k: Fraction(v)
    for k, v in {
        "D2^4": "12",
        "D2^3*H1": "-4",
        "D2^3*D1": "-4",
        "D2^3*H2": "-4",
        "D2^3*D0": "0",
        "D2^2*D1*H1": "0",
        "D2^2*D1^2": "-4",
        "D2^2*D1*H2": "0",
        "D2^2*D1*D0": "0",
        "D2^2*D0*H1": "0",
        "D2^2*D0*H2": "0",
        "D2^2*D0^2": "0",
        "D2*D1^2*H1": "4",
        "D2*D1^3": "12",
        "D2*D1^2*H2": "4",
        "D2*D1^2*D0": "0",
        "D2*D1*D0*H1": "0",
        "D2*D1*D0*H2": "0",
        "D2*D1*D0^2": "0",
        "D2*D0^2*H1": "0",
        "D2*D0^2*H2": "0",
        "D2*D0^3": "0",
        "D1^3*H1": "-8",
        "D1^4": "-20",
        "D1^3*H2": "-8",
        "D1^3*D0": "0",
        "D1^2*D0*H1": "4",
        "D1^2*D0*H2": "4",
        "D1^2*D0^2": "4",
        "D1*D0^2*H1": "-1",
        "D1*D0^2*H2": "-1",
        "D1*D0^3": "-2",
        "D0^3*H1": "1/4",
        "D0^3*H2": "1/4",
        "D0^4": "3/4",
        "D2*D1*H1*H2": "2",
        "D2^2*H1*H2": "2",
        "D1^2*H1*H2": "2",
    }.items()
}

# Two-point degree-two descendant invariants <tau_a x, tau_b y> of P^1.
# Keys are (a, x, b, y) with x, y in {"1", "H"}; swapped pairs listed too.
CORRELATORS: Dict[Tuple[int, str, int, str], Fraction] = {}
for (a, x, b, y), v in {
    (4, "1", 0, "1"): "-3/4",
    (3, "H", 0, "1"): "1/4",
    (3, "1", 0, "H"): "-5/4",
    (3, "1", 1, "1"): "3/4",
    (2, "H", 1, "1"): "-1/4",
    (2, "H", 0, "H"): "1/2",
    (2, "1", 2, "1"): "5/4",
    (2, "1", 1, "H"): "-3/4",
    (1, "H", 1, "H"): "1/2",
}.items():
    CORRELATORS[(a, x, b, y)] = Fraction(v)
    CORRELATORS[(b, y, a, x)] = Fraction(v)
del a, x, b, y, v

# Component-by-component residues of D1*D2*H1*H2 (components not listed give 0).
WORKED_EXAMPLE = "D1*D2*H1*H2"
WORKED_EXAMPLE_SUMMANDS: Dict[int, Tuple[str, str]] = {
    7: ("l0*l1*(l0 - l1)^2", "-(l0 - l1)^4"),
    8: ("l0*l1*(l1 - l0)^2", "-(l0 - l1)^4"),
    9: ("l0*l1*(l0 - l1)^2", "-(l0 - l1)^4"),
    10: ("l0*l1*(l1 - l0)^2", "-(l0 - l1)^4"),
    11: ("2*l0^2", "(l0 - l1)^2"),
    12: ("2*l1^2", "(l1 - l0)^2"),
}
WORKED_EXAMPLE_VALUE = Fraction(2)
