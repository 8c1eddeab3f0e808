"""Restricted Hartree-Fock by Roothaan iteration with oscillation-triggered stabilizers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_MAX_ITERATIONS = 200
DEFAULT_ENERGY_TOLERANCE = 1e-10
DEFAULT_DENSITY_TOLERANCE = 1e-8
DAMPING_FACTOR = 0.5
LEVEL_SHIFT = 0.3  # Hartree, applied to virtuals when damping alone keeps oscillating


class ScfConvergenceError(RuntimeError):
    """SCF failed to converge; carries the iteration energy trace."""

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class RhfResult:
    mo_coefficients: np.ndarray
    orbital_energies: np.ndarray
    total_energy: float
    n_occupied: int
    n_iterations: int = 0
    energy_trace: tuple = field(default=(), repr=False)


def _orthogonalizer(overlap):
    # Symmetric orthogonalization X = S^(-1/2); eigh order fixes degenerate ties.
    evals, evecs = np.linalg.eigh(overlap)
    if evals.min() <= 0.0:
        raise np.linalg.LinAlgError("overlap matrix is not positive definite")
    return evecs @ np.diag(evals ** -0.5) @ evecs.T


def _fix_phases(C):
    # Largest-magnitude coefficient of each column made positive, for run-to-run
    # reproducibility of the determinant and everything downstream.
    C = C.copy()
    for k in range(C.shape[1]):
        idx = int(np.argmax(np.abs(C[:, k])))
        if C[idx, k] < 0.0:
            C[:, k] = -C[:, k]
    return C


def _fock_matrix(h_core, eri, density):
    # G_uv = sum_ls P_ls [(uv|sl) - 1/2 (ul|sv)], chemist-notation eri.
    coulomb = np.einsum("ls,uvsl->uv", density, eri)
    exchange = np.einsum("ls,ulsv->uv", density, eri)
    return h_core + coulomb - 0.5 * exchange


def run_rhf(integrals, n_electrons, max_iterations=DEFAULT_MAX_ITERATIONS,
            energy_tolerance=DEFAULT_ENERGY_TOLERANCE,
            density_tolerance=DEFAULT_DENSITY_TOLERANCE):
    """Converge closed-shell RHF on the given integrals.

    Plain Roothaan steps; the first detected energy rise turns on density
    damping, a second turns on a virtual-orbital level shift (stretched H4
    oscillates between near-degenerate occupations without it). Orbitals are
    reported from an unshifted Fock build at the converged density, ordered by
    ascending orbital energy, phases fixed. Raises ScfConvergenceError with
    the energy trace when the iteration limit is hit.
    """
    if n_electrons % 2 != 0:
        raise ValueError("restricted HF needs an even electron count")
    n_occ = n_electrons // 2
    if n_occ > integrals.n_ao:
        raise ValueError("more electron pairs than basis functions")

    n = integrals.n_ao
    S = integrals.overlap
    h_core = integrals.kinetic + integrals.nuclear_attraction
    X = _orthogonalizer(S)

    def solve_fock(F, density, shift):
        Fp = X.T @ F @ X
        if shift > 0.0:
            # Projector onto the current virtual space, in the orthonormal basis.
            occ_proj = X @ S @ (0.5 * density) @ S @ X
            Fp = Fp + shift * (np.eye(n) - occ_proj)
        eps, Cp = np.linalg.eigh(Fp)
        return eps, _fix_phases(X @ Cp)

    # Core-Hamiltonian guess.
    _eps, C = solve_fock(h_core, np.zeros((n, n)), 0.0)
    density = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T

    energy_prev = None
    trace = []
    mix = 1.0
    shift = 0.0
    oscillations = 0
    for iteration in range(1, max_iterations + 1):
        F = _fock_matrix(h_core, integrals.eri, density)
        energy = 0.5 * np.sum(density * (h_core + F)) + integrals.nuclear_repulsion
        trace.append(energy)

        eps, C = solve_fock(F, density, shift)
        new_density = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T

        if energy_prev is not None:
            if energy > energy_prev + 1e-12:
                oscillations += 1
                if oscillations == 1:
                    mix = DAMPING_FACTOR
                else:
                    shift = LEVEL_SHIFT
                    mix = 1.0
            delta_e = abs(energy - energy_prev)
            delta_p = np.max(np.abs(new_density - density))
            if delta_e < energy_tolerance and delta_p < density_tolerance:
                eps, C = solve_fock(F, density, 0.0)  # unshifted orbital energies
                return RhfResult(mo_coefficients=C, orbital_energies=eps,
                                 total_energy=float(energy), n_occupied=n_occ,
                                 n_iterations=iteration, energy_trace=tuple(trace))
        density = mix * new_density + (1.0 - mix) * density
        energy_prev = energy

    raise ScfConvergenceError(
        f"SCF not converged in {max_iterations} iterations "
        f"(last E = {trace[-1]:.12f} Ha)", tuple(trace))
