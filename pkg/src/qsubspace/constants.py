"""Shared unit conversions and numerical tolerances.

All internal computation is in atomic units (Hartree, Bohr); geometries are
read in Angstrom and converted exactly once, with the constants below as the
single source of truth.
"""

ANGSTROM_TO_BOHR = 1.8897259886
HARTREE_TO_EV = 27.211386

# |coefficient| below this is dropped from Pauli operators.
PAULI_PRUNE_THRESHOLD = 1e-12

# Overlap eigenvalues at or below this make an unthresholded GEVP ill-conditioned.
GEVP_PD_TOLERANCE = 1e-12
