"""Assemble the presentation from pullbacks and geometric relations, then certify it."""

from stablemaps.relations import assemble_presentation
from stablemaps.rings import QuotientRing

ring = QuotientRing(assemble_presentation())
print("relations:")
for r in ring.presentation.relations:
    print("   ", r)
print("graded dimensions:", ring.graded_dimensions())
(top,) = ring.standard_monomials(4)
print(f"top degree is spanned by {top}, with integral {ring.integrate(top)}")
print("int D1*D2*H1*H2 =", ring.integrate("D1*D2*H1*H2"))
