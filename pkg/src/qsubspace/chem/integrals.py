"""Closed-form one- and two-electron integrals over contracted s-type Gaussians."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import build_shells, primitive_norm
from .geometry import GeometryError

# Below this, the Boys function uses its Taylor series; the erf form above.
_BOYS_SERIES_SWITCH = 1e-10


def boys_f0(t):
    """Boys function F0(t) = integral_0^1 exp(-t u^2) du."""
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise ValueError(f"boys_f0 requires finite t >= 0, got {t}")
    if t < _BOYS_SERIES_SWITCH:
        # Taylor expansion around 0; at the switch point the t^2 term is ~1e-21.
        return 1.0 - t / 3.0 + t * t / 10.0
    st = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * math.erf(st)


@dataclass(frozen=True)
class IntegralSet:
    """AO-basis integrals in atomic units; eri carries full 8-fold symmetry."""

    n_ao: int
    overlap: np.ndarray
    kinetic: np.ndarray
    nuclear_attraction: np.ndarray
    eri: np.ndarray
    nuclear_repulsion: float


def _primitive_pairs(shell_a, shell_b):
    """Iterate (alpha, beta, weight, |AB|^2, P) over primitive pairs, weights
    including contraction coefficients and primitive norms."""
    A = np.array(shell_a.center)
    B = np.array(shell_b.center)
    ab2 = float(np.dot(A - B, A - B))
    for alpha, ca in shell_a.primitives:
        na = primitive_norm(alpha)
        for beta, cb in shell_b.primitives:
            nb = primitive_norm(beta)
            p = alpha + beta
            P = (alpha * A + beta * B) / p
            weight = ca * cb * na * nb
            yield alpha, beta, weight, ab2, P


def _overlap_element(shell_a, shell_b):
    s = 0.0
    for alpha, beta, w, ab2, _P in _primitive_pairs(shell_a, shell_b):
        p = alpha + beta
        mu = alpha * beta / p
        s += w * (math.pi / p) ** 1.5 * math.exp(-mu * ab2)
    return s


def _kinetic_element(shell_a, shell_b):
    t = 0.0
    for alpha, beta, w, ab2, _P in _primitive_pairs(shell_a, shell_b):
        p = alpha + beta
        mu = alpha * beta / p
        t += w * mu * (3.0 - 2.0 * mu * ab2) * (math.pi / p) ** 1.5 * math.exp(-mu * ab2)
    return t


def _nuclear_element(shell_a, shell_b, centers_bohr, charges):
    v = 0.0
    for alpha, beta, w, ab2, P in _primitive_pairs(shell_a, shell_b):
        p = alpha + beta
        mu = alpha * beta / p
        pref = w * (2.0 * math.pi / p) * math.exp(-mu * ab2)
        for C, Z in zip(centers_bohr, charges):
            pc2 = float(np.dot(P - C, P - C))
            v -= pref * Z * boys_f0(p * pc2)
    return v


def _eri_element(sa, sb, sc, sd):
    val = 0.0
    for alpha, beta, wab, ab2, P in _primitive_pairs(sa, sb):
        p = alpha + beta
        mu_ab = alpha * beta / p
        eab = math.exp(-mu_ab * ab2)
        for gamma, delta, wcd, cd2, Q in _primitive_pairs(sc, sd):
            q = gamma + delta
            mu_cd = gamma * delta / q
            pq2 = float(np.dot(P - Q, P - Q))
            pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
            val += (wab * wcd * pref * eab * math.exp(-mu_cd * cd2)
                    * boys_f0(p * q / (p + q) * pq2))
    return val


def nuclear_repulsion_energy(geometry):
    """Sum of Z_A Z_B / R_AB over atom pairs, R in Bohr."""
    from ..constants import ANGSTROM_TO_BOHR

    coords = np.array([[x, y, z] for _e, x, y, z in geometry.atoms]) * ANGSTROM_TO_BOHR
    n = len(coords)
    e = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            r = float(np.linalg.norm(coords[i] - coords[j]))
            if r < 1e-6:
                raise GeometryError(f"atoms {i} and {j} coincide (R = {r} Bohr)")
            e += 1.0 / r  # Z = 1 for hydrogen
    return e


def build_integrals(geometry, basis_data=None):
    """All AO integrals for a hydrogen-only geometry, in atomic units."""
    shells = build_shells(geometry, basis_data)
    n = len(shells)
    centers = [np.array(s.center) for s in shells]
    nuclear_centers = centers  # one shell per atom
    charges = [1.0] * n

    overlap = np.zeros((n, n))
    kinetic = np.zeros((n, n))
    nuclear = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            overlap[i, j] = overlap[j, i] = _overlap_element(shells[i], shells[j])
            kinetic[i, j] = kinetic[j, i] = _kinetic_element(shells[i], shells[j])
            nuclear[i, j] = nuclear[j, i] = _nuclear_element(shells[i], shells[j],
                                                             nuclear_centers, charges)

    # Unique (ij|kl) under 8-fold permutational symmetry, mirrored to the full tensor.
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            ij = i * (i + 1) // 2 + j
            for k in range(n):
                for l in range(k + 1):
                    kl = k * (k + 1) // 2 + l
                    if ij < kl:
                        continue
                    v = _eri_element(shells[i], shells[j], shells[k], shells[l])
                    for a, b in ((i, j), (j, i)):
                        for c, d in ((k, l), (l, k)):
                            eri[a, b, c, d] = v
                            eri[c, d, a, b] = v

    return IntegralSet(n_ao=n, overlap=overlap, kinetic=kinetic,
                       nuclear_attraction=nuclear, eri=eri,
                       nuclear_repulsion=nuclear_repulsion_energy(geometry))
