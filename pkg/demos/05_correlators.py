"""Two-point descendant invariants, computed in the ring and checked by localization."""

from stablemaps.correlators import CORRELATOR_SPECS, correlator, cross_check_via_localization

for s in CORRELATOR_SPECS:
    value = correlator(s)
    cross_check_via_localization(s)
    print(f"{str(s):<16} {value}")
