"""Two-point, degree-two gravitational correlators of P^1 in genus zero.

``<tau_a x, tau_b y>`` integrates ``psi1^a ev1^*(x) psi2^b ev2^*(y)`` over
two-pointed conics, with ``x, y`` either the unit ``1`` or the hyperplane
``H``. Gromov-Witten invariants are the case ``a = b = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Polynomial, parse_polynomial
from .localization import DIVISOR_SYMBOLS, FixedPointSpace, space
from .rings import MAIN_RING, QuotientRing, get_ring

__all__ = [
    "CorrelatorSpec",
    "CorrelatorMismatch",
    "correlator",
    "cross_check_via_localization",
    "table3",
    "CORRELATOR_SPECS",
    "DIMENSION",
]

DIMENSION = 4
CLASSES = {"1": 0, "H": 1}


class CorrelatorMismatch(AssertionError):
    """The ring and localization give different values."""


@dataclass(frozen=True)
class CorrelatorSpec:
    """Two insertions ``(level, class)`` with level >= -1 and class in {"1", "H"}."""

    insertions: Tuple[Tuple[int, str], Tuple[int, str]]

    def __post_init__(self):
        if len(self.insertions) != 2:
            raise ValueError("exactly two insertions")
        for d, g in self.insertions:
            if d < -1:
                raise ValueError(f"descendant level {d} < -1 is malformed")
            if g not in CLASSES:
                raise ValueError(f"unknown class {g!r}; use '1' or 'H'")

    @classmethod
    def of(cls, d1: int, g1: str, d2: int, g2: str) -> "CorrelatorSpec":
        return cls(((d1, g1), (d2, g2)))

    @classmethod
    def parse(cls, text: str) -> "CorrelatorSpec":
        """``"tau2H,tau1"``, ``"tau4,1"``, ``"H,tau3"`` and so on."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"bad correlator spec {text!r}")
        ins = []
        for p in parts:
            if p in CLASSES:
                ins.append((0, p))
                continue
            if not p.startswith("tau"):
                raise ValueError(f"bad insertion {p!r}")
            body = p[3:]
            g = "1"
            if body.endswith("H"):
                body, g = body[:-1], "H"
            ins.append((int(body), g))
        return cls(tuple(ins))

    def swapped(self) -> "CorrelatorSpec":
        return CorrelatorSpec((self.insertions[1], self.insertions[0]))

    @property
    def codimension(self) -> int:
        return sum(d + CLASSES[g] for d, g in self.insertions)

    def key(self) -> str:
        out = []
        for d, g in self.insertions:
            if d == 0:
                out.append(g)
            else:
                out.append(f"tau{d}" + ("" if g == "1" else "H"))
        return ",".join(out)

    def integrand(self) -> str:
        factors = []
        for i, (d, g) in enumerate(self.insertions, start=1):
            if d > 0:
                factors.append(f"psi{i}" + (f"^{d}" if d > 1 else ""))
            if g == "H":
                factors.append(f"H{i}")
        return "*".join(factors) or "1"

    def __str__(self):
        return f"<{self.key()}>"


def _vanishes(s: CorrelatorSpec) -> bool:
    return any(d == -1 for d, _ in s.insertions) or s.codimension != DIMENSION


def correlator(s: CorrelatorSpec, ring: Optional[QuotientRing] = None) -> Fraction:
    """Value from the quotient-ring integration functional."""
    if _vanishes(s):
        return Fraction(0)
    ring = ring or get_ring(MAIN_RING)
    return ring.integrate(s.integrand())


_PSI_SUBS = {"psi1": "1/4*D1 + 1/4*D2 + D0 - H1", "psi2": "1/4*D1 + 1/4*D2 + D0 - H2"}


def cross_check_via_localization(
    s: CorrelatorSpec,
    fs: Optional[FixedPointSpace] = None,
    points: Optional[Sequence] = None,
    ring: Optional[QuotientRing] = None,
) -> Fraction:
    """Substitute psi classes by divisors and integrate by localization.

    Raises :class:`CorrelatorMismatch` unless the value equals :func:`correlator`.
    """
    if _vanishes(s):
        raise ValueError(f"{s}: cross-check needs levels >= 0 and codimension {DIMENSION}")
    fs = fs or space(2, 2)
    p = parse_polynomial(s.integrand(), DIVISOR_SYMBOLS + ("psi1", "psi2"))
    p = p.subs(_PSI_SUBS).with_variables(DIVISOR_SYMBOLS)
    total = Fraction(0)
    for exps, c in p.terms.items():
        total += c * fs.integrate(Polynomial.monomial(DIVISOR_SYMBOLS, exps), points)
    expected = correlator(s, ring)
    if total != expected:
        raise CorrelatorMismatch(f"{s}: localization {total}, ring {expected}")
    return total


def _nonvanishing_specs() -> List[CorrelatorSpec]:
    base = [
        (4, "1", 0, "1"),
        (3, "H", 0, "1"),
        (3, "1", 0, "H"),
        (3, "1", 1, "1"),
        (2, "H", 1, "1"),
        (2, "H", 0, "H"),
        (2, "1", 2, "1"),
        (2, "1", 1, "H"),
        (1, "H", 1, "H"),
    ]
    out: List[CorrelatorSpec] = []
    for t in base:
        s = CorrelatorSpec.of(*t)
        out.append(s)
        if s.swapped() != s:
            out.append(s.swapped())
    return out


CORRELATOR_SPECS: Tuple[CorrelatorSpec, ...] = tuple(_nonvanishing_specs())


def table3(ring: Optional[QuotientRing] = None) -> Dict[str, Fraction]:
    """All sixteen nonvanishing two-point correlators, keyed like ``"tau2H,tau1"``."""
    return {s.key(): correlator(s, ring) for s in CORRELATOR_SPECS}
