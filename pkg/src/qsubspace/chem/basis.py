"""STO-3G s-type basis shells for hydrogen, loaded from the checked-in data file."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from ..constants import ANGSTROM_TO_BOHR


@dataclass(frozen=True)
class BasisShell:
    """One contracted s-type Gaussian: center in Bohr, primitive (exponent, coefficient) pairs.

    Coefficients are stored for unit-normalized primitives and rescaled so the
    contracted self-overlap is exactly 1.
    """

    center: tuple
    primitives: tuple

    @property
    def exponents(self):
        return np.array([p[0] for p in self.primitives])

    @property
    def coefficients(self):
        return np.array([p[1] for p in self.primitives])


def primitive_norm(alpha):
    """Normalization constant of an s primitive exp(-alpha r^2)."""
    return (2.0 * alpha / math.pi) ** 0.75


def _contracted_self_overlap(exponents, coefficients):
    # <phi|phi> for phi = sum_k c_k N(a_k) g(a_k); primitive pair overlap in closed form.
    s = 0.0
    for a, ca in zip(exponents, coefficients):
        for b, cb in zip(exponents, coefficients):
            s += ca * cb * primitive_norm(a) * primitive_norm(b) * (math.pi / (a + b)) ** 1.5
    return s


def load_basis_data(path=None):
    """Parse the basis data file into {element: ((exponent, coefficient), ...)}.

    Coefficients are renormalized so each contracted shell has unit self-overlap.
    """
    if path is None:
        text = resources.files("qsubspace.chem").joinpath("data/sto3g_h.txt").read_text()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()

    shells = {}
    element = None
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0].isalpha():
            if element is not None:
                shells[element] = tuple(pairs)
            element = parts[0]
            pairs = []
        else:
            alpha, coeff = float(parts[0]), float(parts[1])
            pairs.append((alpha, coeff))
    if element is not None:
        shells[element] = tuple(pairs)

    for el, prim in shells.items():
        exps = np.array([p[0] for p in prim])
        coefs = np.array([p[1] for p in prim])
        norm = _contracted_self_overlap(exps, coefs)
        coefs = coefs / math.sqrt(norm)
        shells[el] = tuple((float(a), float(c)) for a, c in zip(exps, coefs))
    return shells


def build_shells(geometry, basis_data=None):
    """One contracted 1s shell per hydrogen; centers converted to Bohr."""
    if basis_data is None:
        basis_data = load_basis_data()
    shells = []
    for element, x, y, z in geometry.atoms:
        prim = basis_data[element]
        center = (x * ANGSTROM_TO_BOHR, y * ANGSTROM_TO_BOHR, z * ANGSTROM_TO_BOHR)
        shells.append(BasisShell(center=center, primitives=prim))
    return shells
