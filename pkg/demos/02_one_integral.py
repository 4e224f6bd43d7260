"""Integrate D1*D2*H1*H2 by localization, one residue at a time."""

from stablemaps.algebra import parse_polynomial
from stablemaps.localization import space
from stablemaps.ratfunc import RationalFunction

fs = space(2, 2)
p = parse_polynomial("D1*D2*H1*H2", fs.symbols())
total = RationalFunction(0)
for c in fs.components:
    term = fs.summand(p, c)
    if not term.is_zero():
        print(f"{c.name:>4}: {term}")
    total = total + term
print("sum:", total)
print("at (3,1) and (5,2):", fs.integrate(p))
