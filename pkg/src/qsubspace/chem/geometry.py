"""Hydrogen-only molecular geometries and the plain-text geometry file format."""

from __future__ import annotations

import math
from dataclasses import dataclass

MIN_ATOM_SEPARATION_ANGSTROM = 1e-6


class GeometryError(ValueError):
    """Invalid geometry: wrong element, too few atoms, or coincident atoms."""


@dataclass(frozen=True)
class Geometry:
    """Atom positions in Angstrom. Only hydrogen is supported.

    atoms: tuple of (element, x, y, z).
    """

    atoms: tuple

    def __post_init__(self):
        if len(self.atoms) < 2:
            raise GeometryError("need at least 2 atoms")
        for atom in self.atoms:
            element = atom[0]
            if element != "H":
                raise GeometryError(f"unsupported element {element!r}; hydrogen only")
        n = len(self.atoms)
        for i in range(n):
            for j in range(i + 1, n):
                if _distance(self.atoms[i], self.atoms[j]) < MIN_ATOM_SEPARATION_ANGSTROM:
                    raise GeometryError(f"atoms {i} and {j} are closer than "
                                        f"{MIN_ATOM_SEPARATION_ANGSTROM} Angstrom")
        object.__setattr__(self, "atoms", tuple((e, float(x), float(y), float(z))
                                                for e, x, y, z in self.atoms))

    @property
    def n_atoms(self):
        return len(self.atoms)

    @property
    def n_electrons(self):
        # Neutral hydrogens: one electron each.
        return len(self.atoms)

    def translated(self, dx, dy, dz):
        return Geometry(tuple((e, x + dx, y + dy, z + dz) for e, x, y, z in self.atoms))


def _distance(a, b):
    return math.sqrt((a[1] - b[1]) ** 2 + (a[2] - b[2]) ** 2 + (a[3] - b[3]) ** 2)


def square_h4(side_angstrom):
    """Square H4 in the xy plane with the given edge length."""
    d = float(side_angstrom)
    return Geometry((("H", 0.0, 0.0, 0.0),
                     ("H", d, 0.0, 0.0),
                     ("H", d, d, 0.0),
                     ("H", 0.0, d, 0.0)))


def linear_h4(spacing_angstrom):
    """Linear H4 along z with uniform nearest-neighbour spacing."""
    return linear_custom_h4(spacing_angstrom, spacing_angstrom, spacing_angstrom)


def linear_custom_h4(d1, d2, d3):
    """Linear H4 along z with the three consecutive gaps d1, d2, d3 (Angstrom)."""
    z0 = 0.0
    z1 = z0 + float(d1)
    z2 = z1 + float(d2)
    z3 = z2 + float(d3)
    return Geometry((("H", 0.0, 0.0, z0),
                     ("H", 0.0, 0.0, z1),
                     ("H", 0.0, 0.0, z2),
                     ("H", 0.0, 0.0, z3)))


def h2(bond_angstrom):
    return Geometry((("H", 0.0, 0.0, 0.0), ("H", 0.0, 0.0, float(bond_angstrom))))


def format_geometry(geometry):
    """Serialize to the plain-text format: one `H x y z` line per atom (Angstrom)."""
    lines = [f"{e} {x!r} {y!r} {z!r}" for e, x, y, z in geometry.atoms]
    return "\n".join(lines) + "\n"


def parse_geometry(text):
    """Parse the plain-text geometry format. `#` starts a comment."""
    atoms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise GeometryError(f"line {lineno}: expected `H x y z`, got {raw!r}")
        element = parts[0]
        try:
            x, y, z = (float(p) for p in parts[1:])
        except ValueError as exc:
            raise GeometryError(f"line {lineno}: bad coordinate in {raw!r}") from exc
        atoms.append((element, x, y, z))
    return Geometry(tuple(atoms))


def load_geometry(path):
    with open(path, encoding="utf-8") as f:
        return parse_geometry(f.read())


def save_geometry(geometry, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_geometry(geometry))
