"""Relations among divisor monomials from the Poincare pairing.

A candidate relation ``sum_i c_i m_i = 0`` in degree ``k`` must pair to zero
with every monomial of complementary degree. Integrating each product by
localization gives an exact matrix ``M[i][j] = int m_i * n_j``; relations are
its left nullspace. The Betti numbers of the quotient ring then certify that
nothing is missing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Polynomial, format_rational, monomials_of_degree, parse_polynomial
from .groebner import GroebnerBasis
from .localization import DIVISOR_SYMBOLS, FixedPointSpace, space
from .rings import MAIN_RING, QuotientRing, RingPresentation, builtin_homomorphisms, get_ring

__all__ = [
    "ROW_ORDER",
    "PairingMatrix",
    "RelationSpace",
    "CertificationError",
    "candidate_monomials",
    "default_multipliers",
    "pairing_matrix",
    "nullspace",
    "left_nullspace",
    "relation_space",
    "coefficient_constraints",
    "reduce_to_candidates",
    "verify_named_relations",
    "assemble_presentation",
]

# Coordinates of a degree-one relation are listed in this order.
ROW_ORDER = ("H1", "H2", "D0", "D1", "D2")

_CANDIDATES = {
    1: ("H1", "H2", "D0", "D1", "D2"),
    2: ("D1^2", "D1*D0", "D1*H1", "D1*H2", "D0^2", "D0*H1", "H1*H2"),
    3: ("D1^3", "D1^2*H1", "D1^2*H2", "D1*H1*H2", "D0^3", "D0^2*H1"),
}

Vector = Tuple[Fraction, ...]


class CertificationError(AssertionError):
    """An assembled presentation fails one of its consistency checks."""


def _mono(text: str) -> Polynomial:
    return parse_polynomial(text, ROW_ORDER)


def candidate_monomials(k: int) -> List[Polynomial]:
    """Degree-``k`` monomials that can appear in a relation after the lower-degree ones are used."""
    if k not in _CANDIDATES:
        raise ValueError("candidate monomials exist for degrees 1, 2, 3 only")
    return [_mono(t) for t in _CANDIDATES[k]]


def default_multipliers(k: int) -> List[Polynomial]:
    """All monomials of degree ``4 - k`` in the five divisor classes."""
    if not 0 <= k <= 4:
        raise ValueError("degree out of range")
    out = [Polynomial.monomial(ROW_ORDER, e) for e in monomials_of_degree(len(ROW_ORDER), 4 - k)]
    return sorted(out, key=lambda m: m.to_string())


def _format(m: Polynomial) -> str:
    return m.with_variables(DIVISOR_SYMBOLS).to_string()


@dataclass(frozen=True)
class PairingMatrix:
    rows: Tuple[Polynomial, ...]
    cols: Tuple[Polynomial, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, row: str, col: str) -> Fraction:
        i = [_format(m) for m in self.rows].index(_format(_mono(row)))
        j = [_format(m) for m in self.cols].index(_format(_mono(col)))
        return self.entries[i][j]

    def rank(self) -> int:
        return len(self.rows) - len(left_nullspace(self.entries))

    def to_rows(self) -> List[List[str]]:
        """Header row of column monomials, then one row per candidate."""
        out = [[""] + [_format(c) for c in self.cols]]
        for r, vals in zip(self.rows, self.entries):
            out.append([_format(r)] + [format_rational(v) for v in vals])
        return out


@lru_cache(maxsize=None)
def _integral(key: str, points: Optional[Tuple]) -> Fraction:
    fs: FixedPointSpace = space(2, 2)
    return fs.integrate(parse_polynomial(key, DIVISOR_SYMBOLS), points)


def pairing_matrix(
    k: int,
    multipliers: Optional[Sequence[Polynomial]] = None,
    rows: Optional[Sequence[Polynomial]] = None,
    points: Optional[Sequence] = None,
) -> PairingMatrix:
    """Exact integrals of ``row * multiplier`` over two-pointed conics."""
    rows = list(candidate_monomials(k) if rows is None else rows)
    cols = list(default_multipliers(k) if multipliers is None else multipliers)
    for m in rows:
        if m.degree() != k:
            raise ValueError(f"row {m} does not have degree {k}")
    for m in cols:
        if m.degree() != 4 - k:
            raise ValueError(f"multiplier {m} does not have degree {4 - k}")
    pts = None if points is None else tuple(tuple(p) for p in points)
    entries = tuple(
        tuple(_integral(_format(r * c), pts) for c in cols) for r in rows
    )
    return PairingMatrix(tuple(rows), tuple(cols), entries)


def _rref(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(matrix: Sequence[Sequence[Fraction]]) -> List[Vector]:
    """Basis of ``{x : matrix @ x = 0}`` from the reduced row echelon form."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    red, pivots = _rref([[Fraction(x) for x in row] for row in matrix])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def left_nullspace(matrix: Sequence[Sequence[Fraction]]) -> List[Vector]:
    """Basis of ``{y : y @ matrix = 0}``."""
    if not matrix:
        return []
    transpose = [list(col) for col in zip(*matrix)]
    if not transpose:
        return [tuple(Fraction(int(i == j)) for j in range(len(matrix))) for i in range(len(matrix))]
    return nullspace(transpose)


def _normalize(v: Sequence[Fraction]) -> Vector:
    """Scale to coprime integers with the first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    nz = [x for x in v if x]
    if not nz:
        return tuple(v)
    denoms = 1
    for x in nz:
        denoms = denoms * x.denominator // gcd(denoms, x.denominator)
    ints = [int(x * denoms) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    sign = 1 if nz[0] > 0 else -1
    return tuple(Fraction(sign * x // g) for x in ints)


@dataclass(frozen=True)
class RelationSpace:
    degree: int
    rows: Tuple[Polynomial, ...]
    basis: Tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def polynomials(self) -> List[Polynomial]:
        out = []
        for v in self.basis:
            p = Polynomial.constant(0, ROW_ORDER)
            for c, m in zip(v, self.rows):
                p = p + m * c
            out.append(p)
        return out

    def to_strings(self) -> List[str]:
        return [p.to_string() for p in self.polynomials()]

    def coordinates(self, vector: Sequence[Fraction]) -> Optional[Vector]:
        """Coefficients expressing ``vector`` in the basis, or None if outside."""
        vector = [Fraction(x) for x in vector]
        if not self.basis:
            return () if not any(vector) else None
        # solve basis^T x = vector
        aug = [[self.basis[j][i] for j in range(len(self.basis))] + [vector[i]] for i in range(len(vector))]
        red, pivots = _rref(aug)
        if len(self.basis) in pivots:
            return None
        x = [Fraction(0)] * len(self.basis)
        for row, p in zip(red, pivots):
            x[p] = row[-1]
        return tuple(x)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return self.coordinates(vector) is not None


def relation_space(matrix: PairingMatrix, degree: Optional[int] = None) -> RelationSpace:
    """Normalized relation basis: rows of the RREF of the left nullspace."""
    raw = left_nullspace(matrix.entries)
    if raw:
        red, _ = _rref([list(v) for v in raw])
        raw = red
    degree = matrix.rows[0].degree() if degree is None else degree
    return RelationSpace(degree, matrix.rows, tuple(_normalize(v) for v in raw))


def coefficient_constraints(matrix: PairingMatrix, names: Sequence[str] = "abcde") -> List[str]:
    """Column-wise linear conditions on unknown relation coefficients."""
    out = []
    for j in range(len(matrix.cols)):
        terms = []
        for i, name in enumerate(names[: len(matrix.rows)]):
            c = matrix.entries[i][j]
            if c:
                terms.append((c, name))
        if not terms:
            out.append("0=0")
            continue
        text = ""
        for c, name in terms:
            mag = abs(c)
            coef = "" if mag == 1 else format_rational(mag)
            if not text:
                text = ("-" if c < 0 else "") + coef + name
            else:
                text += (" - " if c < 0 else " + ") + coef + name
        out.append(text + "=0")
    return out


# -- degree-three reduction ---------------------------------------------------

# Lower-degree relations used to rewrite degree-three classes in the six
# candidate monomials: D2 from the linear relation, then H_i^2, D0*H2 = D0*H1
# and the degree-two relation.
_REDUCTION_VARS = ("D2", "D1", "H2", "H1", "D0")
_LOWER_RELATIONS = (
    "D2 - 4*D0 - D1 + 2*H1 + 2*H2",
    "H1^2",
    "H2^2",
    "D0*H2 - D0*H1",
    "D1*D0 + 4*D0^2 - 4*D0*H1",
)


@lru_cache(maxsize=None)
def _reduction_basis() -> GroebnerBasis:
    rels = [parse_polynomial(r, _REDUCTION_VARS) for r in _LOWER_RELATIONS]
    return GroebnerBasis.compute(rels, _REDUCTION_VARS, (1,) * len(_REDUCTION_VARS))


def reduce_to_candidates(p: Polynomial) -> Vector:
    """Coordinates of a degree-three class on the six candidate monomials."""
    subs = {"psi1": "1/4*D1 + 1/4*D2 + D0 - H1", "psi2": "1/4*D1 + 1/4*D2 + D0 - H2"}
    used = set(p.used_variables())
    if used - set(_REDUCTION_VARS) - set(subs):
        raise ValueError(f"{p} uses symbols outside the divisor and psi classes")
    q = p.subs({k: v for k, v in subs.items() if k in used}).with_variables(_REDUCTION_VARS)
    nf = _reduction_basis().reduce(q)
    cands = [m.with_variables(_REDUCTION_VARS) for m in candidate_monomials(3)]
    coords = [nf.coefficient(m) for m in cands]
    rest = nf - sum((m * c for m, c in zip(cands, coords)), Polynomial.constant(0, _REDUCTION_VARS))
    if not rest.is_zero():
        raise ValueError(f"{p} does not reduce to candidate monomials: leftover {rest}")
    return tuple(coords)


@dataclass(frozen=True)
class NamedRelationReport:
    name: str
    vector: Vector
    member: bool
    a: Fraction
    b: Fraction
    pattern_ok: bool


def _pattern(v: Vector) -> bool:
    """``a, b, b, -6a-4b, 32a-8b, -96a-8b``."""
    a, b = v[0], v[1]
    return v == (a, b, b, -6 * a - 4 * b, 32 * a - 8 * b, -96 * a - 8 * b)


NAMED_RELATIONS = {
    "(D1+D2)^3": "(D1 + D2)^3",
    "D1*psi1*psi2": "D1*psi1*psi2",
}


def verify_named_relations(space3: Optional[RelationSpace] = None) -> Dict[str, object]:
    """Check the two geometric cubic relations against the degree-three nullspace."""
    space3 = space3 or relation_space(pairing_matrix(3))
    reports = []
    vectors = []
    for name, text in NAMED_RELATIONS.items():
        p = parse_polynomial(text, _REDUCTION_VARS + ("psi1", "psi2"))
        v = reduce_to_candidates(p)
        vectors.append(v)
        reports.append(NamedRelationReport(name, v, space3.contains(v), v[0], v[1], _pattern(v)))
    independent = len(nullspace([list(col) for col in zip(*vectors)])) == 0
    spans = all(space3.contains(b) for b in space3.basis) and independent and space3.dimension == len(vectors)
    return {
        "relations": reports,
        "independent": independent,
        "span_nullspace": spans,
        "ok": all(r.member and r.pattern_ok for r in reports) and spans,
    }


# -- assembling the presentation ----------------------------------------------

_GENERATORS = ("D0", "D1", "D2", "H1", "H2", "psi1", "psi2")


def assemble_presentation(spaces: Optional[Dict[int, RelationSpace]] = None) -> RingPresentation:
    """Build the two-pointed conic ring from pullbacks and geometric relations.

    Pullback relations come from the two forgetful maps to one-pointed conics
    (``(D1+D2)^3``, ``H_i^2`` and the psi formulas), geometric relations are
    ``D0*psi_i`` and ``D1*psi1*psi2``, and the degree-one nullspace relation
    is used in the form ``D2 - psi1 - psi2``. The result is certified: its
    graded dimensions are (1, 4, 6, 4, 1) and every nullspace relation lies
    in its ideal.
    """
    homs = builtin_homomorphisms()
    pi1, pi2 = homs["pi1"], homs["pi2"]
    pull = {_key(h.substitute(rel)) for h in (pi1, pi2) for rel in h.source.presentation.relations}
    g = lambda s: parse_polynomial(s, _GENERATORS)  # noqa: E731
    h1sq, h2sq = pi2.substitute("H1^2"), pi1.substitute("H1^2")
    cubic = pi1.substitute("D^3")
    psi1_rel, psi2_rel = pi2.substitute("psi1 - 1/4*D + H1"), pi1.substitute("psi1 - 1/4*D + H1")
    if cubic != pi2.substitute("D^3"):
        raise CertificationError("the two pullbacks of D^3 differ")
    relations = [
        h1sq,
        h2sq,
        g("D0*psi1"),
        g("D0*psi2"),
        g("D2 - psi1 - psi2"),
        psi1_rel,
        cubic,
        psi2_rel,
        g("D1*psi1*psi2"),
    ]
    if {_key(r) for r in (h1sq, h2sq, cubic, psi1_rel, psi2_rel)} != set(pull):
        raise CertificationError("pullback relations are not all used")
    reference = get_ring(MAIN_RING).presentation
    pres = RingPresentation(
        "assembled",
        tuple((v, 1) for v in _GENERATORS),
        tuple(r.with_variables(_GENERATORS) for r in relations),
        4,
        reference.calibration,
        "presentation assembled from pullback and geometric relations",
        reference.psi_classes,
    )
    ring = QuotientRing(pres)
    dims = ring.graded_dimensions(5)
    if dims != [1, 4, 6, 4, 1, 0]:
        raise CertificationError(f"graded dimensions {dims}, expected [1, 4, 6, 4, 1, 0]")
    spaces = spaces or {k: relation_space(pairing_matrix(k)) for k in (1, 2, 3)}
    for k, rs in spaces.items():
        for p in rs.polynomials():
            if not ring.contains(p.with_variables(_GENERATORS)):
                raise CertificationError(f"degree-{k} relation {p} is not in the ideal")
        expected = len(candidate_monomials(k)) - rs.dimension
        if ring.graded_dimension(k) != expected:
            raise CertificationError(
                f"degree {k}: {ring.graded_dimension(k)} standard monomials, but candidates minus relations is {expected}"
            )
    return pres


def _key(p: Polynomial) -> str:
    return p.with_variables(_GENERATORS).to_string()
