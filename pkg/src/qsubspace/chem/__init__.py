"""STO-3G integrals and restricted Hartree-Fock for hydrogen-only geometries."""

from .basis import BasisShell, build_shells, load_basis_data
from .geometry import (Geometry, GeometryError, format_geometry, h2, linear_custom_h4,
                       linear_h4, load_geometry, parse_geometry, save_geometry,
                       square_h4)
from .integrals import IntegralSet, boys_f0, build_integrals, nuclear_repulsion_energy
from .scf import RhfResult, ScfConvergenceError, run_rhf

__all__ = [
    "BasisShell", "Geometry", "GeometryError", "IntegralSet", "RhfResult",
    "ScfConvergenceError", "boys_f0", "build_integrals", "build_shells",
    "format_geometry", "h2", "linear_custom_h4", "linear_h4", "load_basis_data",
    "load_geometry", "nuclear_repulsion_energy", "parse_geometry", "run_rhf",
    "save_geometry", "square_h4",
]
