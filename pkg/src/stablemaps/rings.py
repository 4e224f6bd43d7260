"""Graded quotient rings, their integration functionals, and ring maps.

A :class:`RingPresentation` is pure data (generators with degrees, relation
polynomials, top degree, calibration). :class:`QuotientRing` attaches a
reduced Groebner basis and exposes normal forms, graded dimensions and the
integration functional on the top graded piece.

The built-in presentations are named ``M{n}{r}P{d}`` style identifiers, e.g.
``M02P12`` for two-pointed degree-two maps to the projective line; see
:func:`registry`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import Polynomial, format_rational, parse_polynomial
from .groebner import GroebnerBasis

__all__ = [
    "RingPresentation",
    "QuotientRing",
    "RingElement",
    "RingHomomorphism",
    "HomomorphismError",
    "buchberger",
    "normal_form",
    "graded_dimension",
    "integrate_ring",
    "apply_hom",
    "registry",
    "get_presentation",
    "get_ring",
    "builtin_homomorphisms",
    "presentation_to_json",
    "presentation_from_json",
    "MAIN_RING",
]

MAIN_RING = "M02P12"

PolyLike = Union[Polynomial, str, int, Fraction]


class HomomorphismError(ValueError):
    """A proposed ring map does not respect the source relations."""


@dataclass(frozen=True)
class RingPresentation:
    """``Q[generators] / (relations)``, graded by generator degrees."""

    name: str
    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[Polynomial, ...]
    top_degree: int
    calibration: Tuple[Polynomial, Fraction]
    description: str = ""
    psi_classes: Tuple[Tuple[str, Polynomial], ...] = field(default=())

    def __post_init__(self):
        names = self.variables
        for r in self.relations:
            extra = set(r.used_variables()) - set(names)
            if extra:
                raise ValueError(f"{self.name}: relation {r} uses unknown symbols {sorted(extra)}")
            if not r.with_variables(names).is_homogeneous(self.weights):
                raise ValueError(f"{self.name}: relation {r} is not homogeneous")

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(g for g, _ in self.generators)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(d for _, d in self.generators)

    def poly(self, p: PolyLike) -> Polynomial:
        if isinstance(p, str):
            return parse_polynomial(p, self.variables)
        if isinstance(p, Polynomial):
            return p.with_variables(self.variables)
        return Polynomial.constant(p, self.variables)

    @classmethod
    def build(
        cls,
        name: str,
        generators: Sequence[Union[str, Tuple[str, int]]],
        relations: Sequence[PolyLike],
        top_degree: int,
        calibration: Tuple[PolyLike, object],
        description: str = "",
        psi_classes: Mapping[str, PolyLike] = (),
    ) -> "RingPresentation":
        gens = tuple((g, 1) if isinstance(g, str) else (g[0], int(g[1])) for g in generators)
        names = tuple(g for g, _ in gens)

        def conv(p):
            if isinstance(p, str):
                return parse_polynomial(p, names)
            if isinstance(p, Polynomial):
                return p.with_variables(names)
            return Polynomial.constant(p, names)

        mono, value = calibration
        psi = tuple((k, conv(v)) for k, v in dict(psi_classes).items())
        return cls(
            name,
            gens,
            tuple(conv(r) for r in relations),
            int(top_degree),
            (conv(mono), Fraction(value)),
            description,
            psi,
        )


def buchberger(p: RingPresentation) -> GroebnerBasis:
    """Reduced Groebner basis of the relation ideal of ``p``."""
    return GroebnerBasis.compute(p.relations, p.variables, p.weights)


class QuotientRing:
    """A presentation together with its Groebner basis."""

    def __init__(self, presentation: RingPresentation):
        self.presentation = presentation
        self.gb = buchberger(presentation)
        self._calibration_scale: Optional[Fraction] = None

    def __repr__(self):
        return f"QuotientRing({self.name!r})"

    @property
    def name(self) -> str:
        return self.presentation.name

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.presentation.variables

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.presentation.weights

    def poly(self, p: PolyLike) -> Polynomial:
        return self.presentation.poly(p)

    def __call__(self, p: PolyLike) -> "RingElement":
        return self.normal_form(p)

    def gen(self, name: str) -> "RingElement":
        return self.normal_form(Polynomial.var(name, self.variables))

    def gens(self) -> Dict[str, "RingElement"]:
        return {v: self.gen(v) for v in self.variables}

    def normal_form(self, p: PolyLike) -> "RingElement":
        return RingElement(self, self.gb.reduce(self.poly(p)))

    def contains(self, p: PolyLike) -> bool:
        """Ideal membership of ``p`` in the relation ideal."""
        return self.gb.contains(self.poly(p))

    def graded_dimension(self, k: int) -> int:
        if k < 0:
            raise ValueError("degree must be nonnegative")
        return len(self.gb.standard_monomials(k))

    def graded_dimensions(self, upto: Optional[int] = None) -> List[int]:
        upto = self.presentation.top_degree if upto is None else upto
        return [self.graded_dimension(k) for k in range(upto + 1)]

    def standard_monomials(self, k: int) -> List[Polynomial]:
        return [Polynomial.monomial(self.variables, e) for e in self.gb.standard_monomials(k)]

    def _scale(self) -> Fraction:
        if self._calibration_scale is None:
            mono, value = self.presentation.calibration
            top = self.gb.standard_monomials(self.presentation.top_degree)
            if len(top) != 1:
                raise ValueError(f"{self.name}: top graded piece has dimension {len(top)}, expected 1")
            c = self.gb.reduce(mono).coefficient(top[0])
            if not c:
                raise ValueError(f"{self.name}: calibration class {mono} vanishes in the ring")
            self._calibration_scale = value / c
        return self._calibration_scale

    def integrate(self, p: Union[PolyLike, "RingElement"]) -> Fraction:
        """The calibrated linear functional on the top graded piece.

        Homogeneous pieces of other degrees integrate to zero.
        """
        poly = p.poly if isinstance(p, RingElement) else self.gb.reduce(self.poly(p))
        top = self.presentation.top_degree
        total = Fraction(0)
        for exps, c in poly.terms.items():
            if sum(e * w for e, w in zip(exps, self.weights)) == top:
                total += c
        # a nonzero top-degree normal form is a multiple of the single standard monomial
        return total * self._scale() if total else Fraction(0)

    def to_json(self) -> dict:
        return presentation_to_json(self.presentation)


class RingElement:
    """An element of a :class:`QuotientRing`, stored in normal form."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: QuotientRing, poly: Polynomial):
        self.ring = ring
        self.poly = poly

    def _other(self, other) -> Polynomial:
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other.poly
        return self.ring.poly(other)

    def __add__(self, other):
        return self.ring.normal_form(self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring.normal_form(self.poly - self._other(other))

    def __rsub__(self, other):
        return self.ring.normal_form(self._other(other) - self.poly)

    def __neg__(self):
        return RingElement(self.ring, -self.poly)

    def __mul__(self, other):
        return self.ring.normal_form(self.poly * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.normal_form(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            return (self - other).poly.is_zero()
        except (ValueError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring.name, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def integrate(self) -> Fraction:
        return self.ring.integrate(self)

    def __str__(self):
        return self.poly.to_string(self.ring.weights)

    def __repr__(self):
        return f"RingElement({self.ring.name}: {self})"


def normal_form(e: PolyLike, ring: QuotientRing) -> RingElement:
    return ring.normal_form(e)


def graded_dimension(p: Union[RingPresentation, QuotientRing], k: int) -> int:
    ring = p if isinstance(p, QuotientRing) else QuotientRing(p)
    return ring.graded_dimension(k)


def integrate_ring(e: RingElement) -> Fraction:
    return e.ring.integrate(e)


class RingHomomorphism:
    """A graded map of quotient rings given on generators.

    Construction substitutes the images into every source relation and fails
    with :class:`HomomorphismError` unless each one reduces to zero.
    """

    def __init__(self, source: QuotientRing, target: QuotientRing, images: Mapping[str, PolyLike], name: str = ""):
        self.source = source
        self.target = target
        self.name = name or f"{source.name}->{target.name}"
        missing = set(source.variables) - set(images)
        if missing:
            raise HomomorphismError(f"{self.name}: no image for {sorted(missing)}")
        self.images: Dict[str, Polynomial] = {}
        for g, deg in source.presentation.generators:
            img = target.poly(images[g])
            if not img.is_zero() and not (img.is_homogeneous(target.weights) and img.degree(target.weights) == deg):
                raise HomomorphismError(f"{self.name}: image {img} of {g} is not homogeneous of degree {deg}")
            self.images[g] = img
        for rel in source.presentation.relations:
            image = self.substitute(rel)
            if not target.contains(image):
                raise HomomorphismError(
                    f"{self.name}: relation {rel} maps to {target.gb.reduce(image)}, not zero"
                )

    def substitute(self, p: PolyLike) -> Polynomial:
        """Image in the free polynomial ring of the target, before reduction."""
        p = self.source.poly(p) if not isinstance(p, RingElement) else p.poly
        return p.subs(self.images).with_variables(self.target.variables)

    def __call__(self, e: Union[PolyLike, RingElement]) -> RingElement:
        return self.target.normal_form(self.substitute(e))

    def __repr__(self):
        return f"RingHomomorphism({self.name})"


def apply_hom(h: RingHomomorphism, e: Union[PolyLike, RingElement]) -> RingElement:
    return h(e)


# -- built-in presentations ----------------------------------------------

def _builtins() -> List[RingPresentation]:
    b = RingPresentation.build
    return [
        b(
            "M00P11",
            [],
            [],
            0,
            (1, 1),
            "unpointed lines in P^1: a point",
        ),
        b(
            "M03P10",
            ["H"],
            ["H^2"],
            1,
            ("H", 1),
            "three-pointed constant maps: P^1",
        ),
        b(
            "M01P11",
            ["H1"],
            ["H1^2"],
            1,
            ("H1", 1),
            "one-pointed lines: P^1",
            {"psi1": "-2*H1"},
        ),
        b(
            "M02P11",
            ["H1", "H2"],
            ["H1^2", "H2^2"],
            2,
            ("H1*H2", 1),
            "two-pointed lines: P^1 x P^1",
            {"psi1": "H2 - H1", "psi2": "H1 - H2"},
        ),
        b(
            "M03P11",
            ["H1", "H2", "H3", "D"],
            ["H1^2", "H2^2", "H3^2", "(H1 + H2 - D)*(H2 + H3 - D)", "D*(H1 - H2)", "D*(H2 - H3)"],
            3,
            ("H1*H2*H3", 1),
            "three-pointed lines: (P^1)^3 blown up along the small diagonal",
            {"psi1": "H2 + H3 - D", "psi2": "H1 + H3 - D", "psi3": "H1 + H2 - D"},
        ),
        b(
            "M01P12",
            ["D", "H1", "psi1"],
            ["H1^2", "D^3", "psi1 - 1/4*D + H1"],
            3,
            ("D^2*H1", 4),
            "one-pointed conics; psi1 kept as a generator with its linear relation",
            {"psi1": "1/4*D - H1"},
        ),
        b(
            "MM01P12",
            [("H", 1), ("psi", 1), ("S", 1), ("P", 2)],
            ["H^2", "3*psi^2*H + psi^3", "P*psi", "S*(2*H*psi + psi^2)", "S*(2*H + 3*psi) + S^2 - 2*P", "4*H + 4*psi + S"],
            3,
            ("S^2*H", 4),
            "one-pointed conics in the H, psi, S, P generators with S = -D",
            {"psi": "psi"},
        ),
        b(
            MAIN_RING,
            ["D0", "D1", "D2", "H1", "H2", "psi1", "psi2"],
            [
                "H1^2",
                "H2^2",
                "D0*psi1",
                "D0*psi2",
                "D2 - psi1 - psi2",
                "psi1 - 1/4*D1 - 1/4*D2 - D0 + H1",
                "(D1 + D2)^3",
                "psi2 - 1/4*D1 - 1/4*D2 - D0 + H2",
                "D1*psi1*psi2",
            ],
            4,
            ("D2*D1*H1*H2", 2),
            "two-pointed conics in P^1",
            {"psi1": "psi1", "psi2": "psi2"},
        ),
    ]


@lru_cache(maxsize=None)
def _registry_map() -> Dict[str, RingPresentation]:
    return {p.name: p for p in _builtins()}


def registry() -> List[RingPresentation]:
    """All built-in presentations."""
    return list(_registry_map().values())


def get_presentation(name: str) -> RingPresentation:
    try:
        return _registry_map()[name]
    except KeyError:
        raise KeyError(f"unknown presentation {name!r}; known: {sorted(_registry_map())}") from None


@lru_cache(maxsize=None)
def get_ring(name: str = MAIN_RING) -> QuotientRing:
    return QuotientRing(get_presentation(name))


@lru_cache(maxsize=None)
def builtin_homomorphisms() -> Dict[str, RingHomomorphism]:
    """Forgetful pullbacks between the built-in rings, each certified on construction.

    ``pi1``/``pi2`` forget the first/second point of a two-pointed conic; the
    surviving point is relabeled 1, and the psi class picks up ``D0``.
    """
    m012 = get_ring("M01P12")
    m022 = get_ring(MAIN_RING)
    m011 = get_ring("M01P11")
    m021 = get_ring("M02P11")
    m031 = get_ring("M03P11")
    return {
        "pi1": RingHomomorphism(m012, m022, {"D": "D1 + D2", "H1": "H2", "psi1": "psi2 - D0"}, "pi1"),
        "pi2": RingHomomorphism(m012, m022, {"D": "D1 + D2", "H1": "H1", "psi1": "psi1 - D0"}, "pi2"),
        "rho1": RingHomomorphism(m011, m021, {"H1": "H1"}, "rho1"),
        "rho2": RingHomomorphism(m011, m021, {"H1": "H2"}, "rho2"),
        "pi3": RingHomomorphism(m021, m031, {"H1": "H1", "H2": "H2"}, "pi3"),
    }


def identity_homomorphism(ring: QuotientRing) -> RingHomomorphism:
    return RingHomomorphism(ring, ring, {v: v for v in ring.variables}, f"id_{ring.name}")


# -- JSON ---------------------------------------------------------------

def presentation_to_json(p: RingPresentation) -> dict:
    mono, value = p.calibration
    return {
        "name": p.name,
        "description": p.description,
        "generators": [{"symbol": g, "degree": d} for g, d in p.generators],
        "relations": [r.to_string(p.weights) for r in p.relations],
        "top_degree": p.top_degree,
        "calibration": {"monomial": mono.to_string(p.weights), "value": format_rational(value)},
        "psi_classes": {k: v.to_string(p.weights) for k, v in p.psi_classes},
    }


def presentation_from_json(doc: Union[str, dict]) -> RingPresentation:
    if isinstance(doc, str):
        doc = json.loads(doc)
    cal = doc["calibration"]
    return RingPresentation.build(
        doc["name"],
        [(g["symbol"], g["degree"]) for g in doc["generators"]],
        doc["relations"],
        doc["top_degree"],
        (cal["monomial"], Fraction(cal["value"])),
        doc.get("description", ""),
        doc.get("psi_classes", {}),
    )
