"""Shot-noise stability of subspace excited-state quantum algorithms.

Library layout:
  chem        STO-3G integrals and restricted Hartree-Fock for H-only systems
  qop         fermionic/Pauli operator algebra and the Jordan-Wigner mapping
  sim         exact statevector engine, UCCSD-VQE, full diagonalization oracle
  subspace    excitation manifolds, exact and shot-sampled subspace matrices
  solve       (generalized) eigensolvers, thresholding, state matching
  experiments seeded experiment runner, sweeps, CSV persistence, SVG plots
"""

__version__ = "0.1.0"
