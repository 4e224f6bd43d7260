"""Rational functions in the torus weights and the square-zero extension.

:class:`RationalFunction` is a quotient of polynomials in ``l0, l1`` (the
weights of the two-dimensional torus), kept in lowest terms with a monic
denominator. The gcd is the classical primitive-remainder-sequence gcd,
viewing a bivariate polynomial as univariate in ``l0`` over ``Q[l1]``.

:class:`EquivariantClass` adjoins one nilpotent ``psi`` with ``psi^2 = 0``;
it is what fixed components of dimension one contribute.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .algebra import Polynomial, _coerce_scalar, divide_exact, format_rational, grevlex_key, parse_polynomial

WEIGHTS = ("l0", "l1")

__all__ = [
    "WEIGHTS",
    "PoleError",
    "NotInvertibleError",
    "RationalFunction",
    "EquivariantClass",
    "weight",
    "ratfunc_arith",
    "nilpotent_inverse",
    "eval_at_point",
    "poly_gcd",
]


class PoleError(ZeroDivisionError):
    """The denominator vanishes at the requested evaluation point."""


class NotInvertibleError(ZeroDivisionError):
    """The constant part of a square-zero class is zero."""


# -- univariate helpers over Q (coefficient lists, lowest degree first) ----

def _utrim(a: List[Fraction]) -> List[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _usub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _utrim([Fraction(x) for x in out])


def _udivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        _utrim(a)
    return _utrim(q), a


def _ugcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lc = a[-1]
    return [x / lc for x in a]


# -- bivariate as univariate in x = l0 with coefficients in Q[y], y = l1 ----

def _to_nested(p: Polynomial):
    p = p.with_variables(WEIGHTS)
    dx = max((e[0] for e in p.terms), default=-1)
    nested = [[] for _ in range(dx + 1)]
    for (i, j), c in p.terms.items():
        row = nested[i]
        if len(row) <= j:
            row.extend([Fraction(0)] * (j + 1 - len(row)))
        row[j] += c
    return [_utrim(r) for r in nested]


def _from_nested(nested) -> Polynomial:
    terms = {}
    for i, row in enumerate(nested):
        for j, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return Polynomial(WEIGHTS, terms)


def _ntrim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _content(a):
    g = []
    for row in a:
        if row:
            g = _ugcd(g, row) if g else _ugcd(row, [])
    return g


def _primitive(a):
    c = _content(a)
    if not c:
        return a
    return [(_udivmod(row, c)[0] if row else []) for row in a]


def _prem(a, b):
    """``a`` reduced against ``b`` by pseudo-division in ``x``."""
    a = [list(r) for r in a]
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        new = [_umul(lb, r) for r in a]
        for i, r in enumerate(b):
            new[i + shift] = _usub(new[i + shift], _umul(la, r))
        a = _ntrim(new)
    return a


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor in ``Q[l0, l1]`` (unnormalized scalar)."""
    a, b = _to_nested(p), _to_nested(q)
    if not a:
        return _from_nested(b) if b else Polynomial.constant(1, WEIGHTS)
    if not b:
        return _from_nested(a)
    c = _ugcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    g = _primitive(a)
    return _from_nested([_umul(c, row) for row in g])


def _lead_coefficient(p: Polynomial) -> Fraction:
    exps, c = max(p.terms.items(), key=lambda t: grevlex_key(t[0]))
    return c


def _as_weight_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        if set(x.used_variables()) - set(WEIGHTS):
            raise ValueError(f"{x} is not a polynomial in {WEIGHTS}")
        return x.with_variables(WEIGHTS)
    if isinstance(x, str):
        return parse_polynomial(x).with_variables(WEIGHTS)
    return Polynomial.constant(_coerce_scalar(x), WEIGHTS)


class RationalFunction:
    """An element of ``Q(l0, l1)`` in lowest terms with monic denominator.

    >>> RationalFunction("(l0 - l1)^4", "(l0 - l1)^2")
    RationalFunction('l0^2 - 2*l0*l1 + l1^2')
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _normalized=False):
        num, den = _as_weight_poly(num), _as_weight_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Polynomial.constant(1, WEIGHTS)
            else:
                if not den.is_constant():
                    g = poly_gcd(num, den)
                    if not g.is_constant():
                        num, den = divide_exact(num, g), divide_exact(den, g)
                lc = _lead_coefficient(den)
                if lc != 1:
                    num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _lift(cls, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, str, int, Fraction)):
            return cls(other)
        raise TypeError

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

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
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / (self ** -k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous quotient (numerator minus denominator)."""
        if not (self.num.is_homogeneous() and self.den.is_homogeneous()):
            raise ValueError(f"{self} is not homogeneous")
        if self.num.is_zero():
            raise ValueError("zero has no degree")
        return self.num.degree() - self.den.degree()

    def swap_weights(self) -> "RationalFunction":
        """Exchange ``l0`` and ``l1``."""
        mapping = {"l0": Polynomial.var("l1", WEIGHTS), "l1": Polynomial.var("l0", WEIGHTS)}
        return RationalFunction(self.num.subs(mapping), self.den.subs(mapping))

    def at(self, point) -> Fraction:
        return eval_at_point(self, point)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def weight(i: int) -> RationalFunction:
    """The torus weight ``l0`` or ``l1``."""
    return RationalFunction(Polynomial.var(WEIGHTS[i], WEIGHTS))


def ratfunc_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_at_point(f, point: Sequence) -> Fraction:
    """Exact value of ``f`` at ``(l0, l1) = point``."""
    if not isinstance(f, RationalFunction):
        f = RationalFunction(f)
    p0, p1 = Fraction(point[0]), Fraction(point[1])
    env = {"l0": p0, "l1": p1}
    den = f.den.evaluate(env)
    if not den:
        raise PoleError(f"{f} has a pole at ({p0}, {p1})")
    return f.num.evaluate(env) / den


class EquivariantClass:
    """``const + psi_part * psi`` with ``psi^2 = 0``.

    The two parts may be :class:`RationalFunction` (symbolic weights) or
    :class:`Fraction` (weights already specialized to a point).
    """

    __slots__ = ("const", "psi")

    def __init__(self, const=0, psi=0):
        object.__setattr__(self, "const", const)
        object.__setattr__(self, "psi", psi)

    def __setattr__(self, name, value):
        raise AttributeError("EquivariantClass is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, EquivariantClass):
            return other
        if isinstance(other, (RationalFunction, Polynomial, int, Fraction, str)):
            if isinstance(other, (Polynomial, str)):
                other = RationalFunction(other)
            return EquivariantClass(other, 0)
        raise TypeError

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return EquivariantClass(self.const + other.const, self.psi + other.psi)

    __radd__ = __add__

    def __neg__(self):
        return EquivariantClass(-self.const, -self.psi)

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
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return EquivariantClass(
            self.const * other.const,
            self.const * other.psi + self.psi * other.const,
        )

    __rmul__ = __mul__

    def inverse(self) -> "EquivariantClass":
        return nilpotent_inverse(self)

    def __truediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * nilpotent_inverse(other)

    def __rtruediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other * nilpotent_inverse(self)

    def __pow__(self, k: int):
        if k < 0:
            return nilpotent_inverse(self) ** -k
        result = EquivariantClass(1, 0)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.const == other.const and _zero_or_eq(self.psi, other.psi)

    def __hash__(self):
        return hash((self.const, self.psi))

    def is_zero(self) -> bool:
        return not self.const and not self.psi

    def has_psi(self) -> bool:
        return bool(self.psi)

    def at(self, point) -> "EquivariantClass":
        """Specialize both parts at ``(l0, l1) = point``."""
        return EquivariantClass(_value_at(self.const, point), _value_at(self.psi, point))

    def swap_weights(self) -> "EquivariantClass":
        return EquivariantClass(_swap(self.const), _swap(self.psi))

    def __str__(self):
        if not self.psi:
            return _fmt(self.const)
        psi = _fmt(self.psi)
        psi_term = "psi" if psi == "1" else f"({psi})*psi"
        if not self.const:
            return psi_term
        return f"{_fmt(self.const)} + {psi_term}"

    def __repr__(self):
        return f"EquivariantClass({str(self)!r})"


def _zero_or_eq(a, b):
    return (not a and not b) or a == b


def _value_at(x, point):
    if isinstance(x, RationalFunction):
        return eval_at_point(x, point)
    return Fraction(x)


def _swap(x):
    return x.swap_weights() if isinstance(x, RationalFunction) else x


def _fmt(x):
    if isinstance(x, RationalFunction):
        return str(x)
    return format_rational(x)


def nilpotent_inverse(c) -> EquivariantClass:
    """Inverse of ``a + b psi``, namely ``1/a - (b/a^2) psi``."""
    c = EquivariantClass._lift(c)
    if not c.const:
        raise NotInvertibleError(f"{c} has zero constant part")
    inv = 1 / c.const
    if isinstance(c.const, int):
        inv = Fraction(1, c.const)
    return EquivariantClass(inv, -c.psi * inv * inv)
