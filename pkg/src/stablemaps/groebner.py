"""Buchberger's algorithm over Q in a weighted graded reverse lex order.

Internally polynomials are plain ``{exponent: Fraction}`` dicts over a fixed
variable tuple; :class:`GroebnerBasis` converts to and from
:class:`~stablemaps.algebra.Polynomial` at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .algebra import Exponent, Polynomial, grevlex_key, monomials_of_degree

Terms = Dict[Exponent, Fraction]

__all__ = ["GroebnerBasis", "groebner_basis", "reduce_terms"]


def _lead(terms: Terms, weights) -> Exponent:
    return max(terms, key=lambda e: grevlex_key(e, weights))


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monic(terms: Terms, weights) -> Terms:
    lc = terms[_lead(terms, weights)]
    if lc == 1:
        return dict(terms)
    return {e: c / lc for e, c in terms.items()}


def _sub_scaled(target: Terms, source: Terms, c: Fraction, shift: Exponent) -> None:
    """``target -= c * x^shift * source`` in place."""
    for e, v in source.items():
        t = tuple(x + y for x, y in zip(e, shift))
        nv = target.get(t, 0) - c * v
        if nv:
            target[t] = nv
        else:
            target.pop(t, None)


def reduce_terms(f: Terms, basis: Sequence[Terms], leads: Sequence[Exponent], weights) -> Terms:
    """Full reduction of ``f`` modulo monic ``basis`` with leading exponents ``leads``."""
    p = dict(f)
    rem: Terms = {}
    while p:
        lt = _lead(p, weights)
        c = p[lt]
        for g, lg in zip(basis, leads):
            if _divides(lg, lt):
                shift = tuple(x - y for x, y in zip(lt, lg))
                _sub_scaled(p, g, c, shift)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def _spoly(f: Terms, lf: Exponent, g: Terms, lg: Exponent) -> Terms:
    lcm = tuple(max(x, y) for x, y in zip(lf, lg))
    out: Terms = {}
    _sub_scaled(out, f, Fraction(-1), tuple(x - y for x, y in zip(lcm, lf)))
    _sub_scaled(out, g, Fraction(1), tuple(x - y for x, y in zip(lcm, lg)))
    return out


def groebner_basis(polys: Sequence[Terms], nvars: int, weights=None) -> List[Terms]:
    """Reduced Groebner basis (monic, sorted by decreasing leading term)."""
    key = lambda e: grevlex_key(e, weights)  # noqa: E731
    basis: List[Terms] = []
    leads: List[Exponent] = []
    for f in polys:
        if f:
            r = reduce_terms(f, basis, leads, weights)
            if r:
                r = _monic(r, weights)
                basis.append(r)
                leads.append(_lead(r, weights))

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]

    def pair_key(p):
        i, j = p
        lcm = tuple(max(x, y) for x, y in zip(leads[i], leads[j]))
        return (key(lcm), -i, -j)

    while pairs:
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()  # smallest lcm first
        li, lj = leads[i], leads[j]
        if all(not (x and y) for x, y in zip(li, lj)):
            continue  # coprime leading terms
        s = _spoly(basis[i], li, basis[j], lj)
        r = reduce_terms(s, basis, leads, weights)
        if r:
            r = _monic(r, weights)
            basis.append(r)
            leads.append(_lead(r, weights))
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))

    # minimize: in increasing leading-term order, drop anything whose leading
    # term is divisible by one already kept
    keep: List[int] = []
    for i in sorted(range(len(basis)), key=lambda i: key(leads[i])):
        if not any(_divides(leads[j], leads[i]) for j in keep):
            keep.append(i)
    basis = [basis[i] for i in keep]
    leads = [leads[i] for i in keep]
    reduced = []
    for i, g in enumerate(basis):
        others = [b for j, b in enumerate(basis) if j != i]
        other_leads = [l for j, l in enumerate(leads) if j != i]
        tail = {e: c for e, c in g.items() if e != leads[i]}
        tail = reduce_terms(tail, others, other_leads, weights)
        tail[leads[i]] = Fraction(1)
        reduced.append(tail)
    reduced.sort(key=lambda t: key(_lead(t, weights)), reverse=True)
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis for the weighted grevlex order on ``variables``."""

    variables: Tuple[str, ...]
    weights: Tuple[int, ...]
    basis: Tuple[Polynomial, ...]

    @classmethod
    def compute(cls, relations: Sequence[Polynomial], variables: Sequence[str], weights: Sequence[int]):
        variables, weights = tuple(variables), tuple(weights)
        raw = [r.with_variables(variables).terms for r in relations]
        gb = groebner_basis(raw, len(variables), weights)
        return cls(variables, weights, tuple(Polynomial(variables, t) for t in gb))

    @property
    def leading_exponents(self) -> Tuple[Exponent, ...]:
        return tuple(_lead(g.terms, self.weights) for g in self.basis)

    def leading_monomials(self) -> Tuple[Polynomial, ...]:
        return tuple(Polynomial.monomial(self.variables, e) for e in self.leading_exponents)

    def reduce(self, f: Polynomial) -> Polynomial:
        f = f.with_variables(self.variables)
        terms = reduce_terms(f.terms, [g.terms for g in self.basis], self.leading_exponents, self.weights)
        return Polynomial(self.variables, terms)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.leading_exponents)

    def is_standard(self, exps: Exponent) -> bool:
        return not any(_divides(l, exps) for l in self.leading_exponents)

    def standard_monomials(self, k: int) -> List[Exponent]:
        """Exponents of (weighted) degree ``k`` outside the leading-term ideal."""
        found = [e for e in monomials_of_degree(len(self.variables), k, self.weights) if self.is_standard(e)]
        found.sort(key=lambda e: grevlex_key(e, self.weights), reverse=True)
        return found

    # certificates

    def s_pairs_reduce_to_zero(self) -> bool:
        leads = self.leading_exponents
        terms = [g.terms for g in self.basis]
        for j in range(len(terms)):
            for i in range(j):
                s = _spoly(terms[i], leads[i], terms[j], leads[j])
                if reduce_terms(s, terms, leads, self.weights):
                    return False
        return True

    def is_reduced(self) -> bool:
        leads = self.leading_exponents
        for i, g in enumerate(self.basis):
            if g.terms[leads[i]] != 1:
                return False
            for e in g.terms:
                for j, l in enumerate(leads):
                    if j != i and _divides(l, e):
                        return False
        return True

    def to_strings(self) -> List[str]:
        return [g.to_string(self.weights) for g in self.basis]
