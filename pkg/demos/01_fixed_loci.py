"""List the torus-fixed components of two-pointed conics with their Euler classes."""

from stablemaps.localization import space

fs = space(2, 2)
print(f"{len(fs.components)} fixed components, moduli dimension {fs.dimension}")
for c in fs.components:
    print(f"{c.name:>4}  {c.graph.describe():<22} aut={c.aut_order}  dim={c.moduli_dimension}  e={fs.euler(c)}")
