"""Exact multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` throughout; nothing is ever
rounded. A polynomial carries its own ordered tuple of variable names and a
mapping from dense exponent tuples to nonzero coefficients. Binary operations
between polynomials over different variable tuples unify the tuples by name.

The canonical text form lists terms in graded reverse lexicographic order
(largest first) with rational coefficients written ``p/q``::

    >>> p = parse_polynomial("(H1 + H2)^2")
    >>> str(p)
    'H1^2 + 2*H1*H2 + H2^2'
    >>> parse_polynomial(str(p)) == p
    True
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]

__all__ = [
    "Rational",
    "Polynomial",
    "parse_polynomial",
    "format_rational",
    "grevlex_key",
    "monomials_of_degree",
    "divide_exact",
    "poly_arith",
]


def format_rational(q) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def grevlex_key(exps: Exponent, weights: Optional[Sequence[int]] = None):
    """Sort key for the (weighted) graded reverse lexicographic order.

    Larger keys are larger monomials. Ties in weighted degree are broken by
    the reverse lexicographic rule: the monomial with the smaller exponent in
    the last variable where they differ is the larger one.
    """
    if weights is None:
        deg = sum(exps)
    else:
        deg = sum(e * w for e, w in zip(exps, weights))
    return (deg, tuple(-e for e in reversed(exps)))


def monomials_of_degree(nvars: int, k: int, weights: Optional[Sequence[int]] = None) -> Iterator[Exponent]:
    """All exponent tuples of (weighted) degree ``k`` in ``nvars`` variables."""
    if weights is None:
        for combo in combinations_with_replacement(range(nvars), k):
            exps = [0] * nvars
            for i in combo:
                exps[i] += 1
            yield tuple(exps)
        return

    def rec(i, remaining):
        if i == nvars:
            if remaining == 0:
                yield ()
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            for rest in rec(i + 1, remaining - e * w):
                yield (e,) + rest

    yield from rec(0, k)


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class Polynomial:
    """A polynomial with rational coefficients in named variables.

    Instances are immutable. ``terms`` maps exponent tuples (one entry per
    variable, in the order of ``variables``) to nonzero :class:`Fraction`
    coefficients.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Optional[Mapping[Exponent, object]] = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        clean: Dict[Exponent, Fraction] = {}
        n = len(variables)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not match variables {variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _coerce_scalar(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, variables: Iterable[str] = ()) -> "Polynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Optional[Iterable[str]] = None) -> "Polynomial":
        variables = (name,) if variables is None else tuple(variables)
        i = variables.index(name)
        exps = [0] * len(variables)
        exps[i] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, variables: Iterable[str], exps: Exponent, c=1) -> "Polynomial":
        return cls(variables, {tuple(exps): c})

    # -- variable handling -----------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "Polynomial":
        """Re-express over ``variables``; every variable in use must be kept."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        used = self.used_variables()
        missing = [v for v in used if v not in index]
        if missing:
            raise ValueError(f"variables {missing} are in use and cannot be dropped")
        pos = [index.get(v) for v in self.variables]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exps):
                if e:
                    new[p] = e
            terms[tuple(new)] = c
        return Polynomial(variables, terms)

    def used_variables(self) -> Tuple[str, ...]:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e:
                    used.add(v)
        return tuple(v for v in self.variables if v in used)

    def _unify(self, other: "Polynomial"):
        if self.variables == other.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(_coerce_scalar(other), self.variables)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        a, b = self._unify(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _coerce_scalar(other)
            except TypeError:
                return NotImplemented
            return Polynomial(self.variables, {e: c * v for e, v in self.terms.items()})
        a, b = self._unify(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(a.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def _normalized_items(self):
        out = []
        for exps, c in self.terms.items():
            out.append((tuple(sorted((v, e) for v, e in zip(self.variables, exps) if e)), c))
        return frozenset(out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self._normalized_items() == other._normalized_items()

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._normalized_items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def degree(self, weights: Optional[Sequence[int]] = None) -> int:
        """Largest (weighted) total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if weights is None:
            return max(sum(e) for e in self.terms)
        return max(sum(x * w for x, w in zip(e, weights)) for e in self.terms)

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        if weights is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {sum(x * w for x, w in zip(e, weights)) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self, weights: Optional[Sequence[int]] = None):
        """Terms as ``(exps, coeff)`` pairs, largest first in grevlex."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0], weights), reverse=True)

    def coefficient(self, mono) -> Fraction:
        """Coefficient of a monomial given as a Polynomial or exponent tuple."""
        if isinstance(mono, Polynomial):
            if len(mono.terms) != 1:
                raise ValueError("expected a single monomial")
            a, m = self._unify(mono)
            (exps,) = m.terms
            return a.terms.get(exps, Fraction(0))
        return self.terms.get(tuple(mono), Fraction(0))

    def monomials(self):
        """The monomials of this polynomial (coefficient 1), largest first."""
        return [Polynomial(self.variables, {e: 1}) for e, _ in self.sorted_terms()]

    # -- substitution -----------------------------------------------------

    def subs(self, mapping: Mapping[str, object]) -> "Polynomial":
        """Simultaneously substitute polynomials or scalars for variables."""
        result = Polynomial((), {})
        images = {}
        for v in self.variables:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, str):
                    img = parse_polynomial(img)
                images[v] = img if isinstance(img, Polynomial) else Polynomial.constant(img)
            else:
                images[v] = Polynomial.var(v)
        powers: Dict[Tuple[str, int], Polynomial] = {}
        for exps, c in self.terms.items():
            term = Polynomial.constant(c)
            for v, e in zip(self.variables, exps):
                if e:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = images[v] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        """Exact value at a point; every used variable must be assigned."""
        total = Fraction(0)
        vals = [point[v] if v in point else None for v in self.variables]
        for exps, c in self.terms.items():
            t = c
            for val, e in zip(vals, exps):
                if e:
                    if val is None:
                        raise KeyError("a variable in use has no value")
                    t *= Fraction(val) ** e
            total += t
        return total

    # -- text -------------------------------------------------------------

    def format_monomial(self, exps: Exponent) -> str:
        parts = []
        for v, e in zip(self.variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def to_string(self, weights: Optional[Sequence[int]] = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (exps, c) in enumerate(self.sorted_terms(weights)):
            mono = self.format_monomial(exps)
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, variables={self.variables!r})"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """``op`` is ``"add"`` or ``"mul"``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``; raises ``ArithmeticError`` if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    a, b = a._unify(b)
    lex = lambda e: e  # noqa: E731 - plain lex on exponent tuples
    b_lead = max(b.terms, key=lex)
    b_lc = b.terms[b_lead]
    rem = dict(a.terms)
    quot: Dict[Exponent, Fraction] = {}
    while rem:
        lead = max(rem, key=lex)
        shift = tuple(x - y for x, y in zip(lead, b_lead))
        if any(s < 0 for s in shift):
            raise ArithmeticError("inexact polynomial division")
        c = rem[lead] / b_lc
        quot[shift] = quot.get(shift, 0) + c
        for e, cb in b.terms.items():
            t = tuple(x + y for x, y in zip(e, shift))
            v = rem.get(t, 0) - c * cb
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return Polynomial(a.variables, quot)


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str, variables: Optional[Sequence[str]]):
        self.tokens = []
        pos = 0
        text = text.strip().replace("**", "^")
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                break
            if m.group(1) is not None:
                self.tokens.append(("num", int(m.group(1))))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2)))
            else:
                self.tokens.append(("op", m.group(3)))
            pos = m.end()
        self.i = 0
        self.fixed = variables is not None
        self.variables = list(variables or [])

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}, got {val!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p.with_variables(self.variables)

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise ValueError("division by a non-constant")
                p = p / q.constant_value()
        return p

    def factor(self):
        if self.peek() in (("op", "-"), ("op", "+")):
            _, op = self.take()
            p = self.factor()
            return -p if op == "-" else p
        base = self.base()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer literal")
            return base ** val
        return base

    def base(self):
        kind, val = self.take()
        if kind == "num":
            return Polynomial.constant(val)
        if kind == "name":
            if val not in self.variables:
                if self.fixed:
                    raise ValueError(f"unknown variable {val!r}")
                self.variables.append(val)
            return Polynomial.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")


def parse_polynomial(text: str, variables: Optional[Sequence[str]] = None) -> Polynomial:
    """Parse the canonical text form (or any expression in ``+ - * / ^ ( )``).

    With ``variables`` given, the result lives over exactly those variables
    and unknown names are rejected; otherwise variables are taken in order
    of first appearance.
    """
    return _Parser(text, variables).parse()
