import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from qsubspace.chem import (Geometry, GeometryError, boys_f0, build_integrals,
                            build_shells, format_geometry, h2, linear_h4,
                            load_basis_data, parse_geometry, run_rhf, square_h4)
from qsubspace.chem.basis import BasisShell, primitive_norm
from qsubspace.chem.integrals import _kinetic_element, _overlap_element
from qsubspace.chem.scf import ScfConvergenceError

from conftest import fixture_value


# ---------------------------------------------------------------- Boys function

def boys_quadrature(t):
    """Defining-integral oracle: F0(t) = int_0^1 exp(-t u^2) du."""
    val, err = integrate.quad(lambda u: math.exp(-t * u * u), 0.0, 1.0,
                              epsabs=1e-14, epsrel=1e-14)
    assert err < 1e-12
    return val


def test_boys_at_zero():
    assert boys_f0(0.0) == 1.0


def test_boys_at_one_vs_quadrature():
    assert abs(boys_f0(1.0) - boys_quadrature(1.0)) < 1e-10
    assert abs(boys_f0(1.0) - 0.7468241328) < 1e-9


def test_boys_asymptotic():
    # t = 25: erf(5) = 1 to ~1e-12, so F0 = sqrt(pi/25)/2 to high accuracy.
    expected = 0.5 * math.sqrt(math.pi / 25.0) * math.erf(5.0)
    assert abs(boys_f0(25.0) / expected - 1.0) < 1e-10
    assert abs(boys_f0(25.0) - boys_quadrature(25.0)) < 1e-10


def test_boys_domain_errors():
    with pytest.raises(ValueError):
        boys_f0(-1e-9)
    with pytest.raises(ValueError):
        boys_f0(float("nan"))
    with pytest.raises(ValueError):
        boys_f0(float("inf"))


@given(st.floats(min_value=0.0, max_value=80.0))
@settings(max_examples=40, deadline=None)
def test_boys_matches_quadrature(t):
    assert abs(boys_f0(t) - boys_quadrature(t)) < 1e-10


def test_boys_continuous_at_switch():
    lo, hi = boys_f0(1e-10 * (1 - 1e-9)), boys_f0(1e-10 * (1 + 1e-9))
    assert abs(lo - hi) < 1e-12


# ------------------------------------------------------------------- basis set

def test_contracted_shells_are_normalized():
    ints = build_integrals(h2(0.9))
    assert np.allclose(np.diag(ints.overlap), 1.0, atol=1e-10)


def test_basis_data_file_roundtrip(tmp_path):
    data = load_basis_data()
    assert "H" in data and len(data["H"]) == 3
    path = tmp_path / "basis.txt"
    lines = ["H 1s"] + [f"{a!r} {c!r}" for a, c in data["H"]]
    path.write_text("\n".join(lines) + "\n")
    again = load_basis_data(path)
    assert np.allclose(again["H"], data["H"], atol=1e-14)


# -------------------------------------------- closed forms vs quadrature oracle

def cylindrical_pair_quadrature(shell_a, shell_b, use_laplacian=False):
    """Numerical-quadrature oracle for two-center s-function integrals.

    Both centers are placed on the z axis by the caller. Integrates in
    cylindrical coordinates: 2*pi * int rho drho dz.
    """
    za, zb = shell_a.center[2], shell_b.center[2]

    def ao(shell, rho, z):
        d2 = rho * rho + (z - shell.center[2]) ** 2
        return sum(c * primitive_norm(a) * math.exp(-a * d2)
                   for a, c in shell.primitives)

    def ao_lap(shell, rho, z):
        d2 = rho * rho + (z - shell.center[2]) ** 2
        return sum(c * primitive_norm(a) * (4 * a * a * d2 - 6 * a) * math.exp(-a * d2)
                   for a, c in shell.primitives)

    def integrand(rho, z):
        left = ao(shell_a, rho, z)
        right = -0.5 * ao_lap(shell_b, rho, z) if use_laplacian else ao(shell_b, rho, z)
        return 2.0 * math.pi * rho * left * right

    lo, hi = min(za, zb) - 12.0, max(za, zb) + 12.0
    val, err = integrate.dblquad(integrand, lo, hi, 0.0, 12.0,
                                 epsabs=1e-11, epsrel=1e-11)
    assert err < 1e-9
    return val


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_overlap_and_kinetic_vs_quadrature(seed):
    rng = np.random.default_rng(seed)
    # random single-primitive and two-primitive shells on the z axis
    def random_shell(z):
        n_prim = int(rng.integers(1, 3))
        prims = tuple((float(rng.uniform(0.2, 3.0)), float(rng.uniform(0.3, 1.0)))
                      for _ in range(n_prim))
        return BasisShell(center=(0.0, 0.0, z), primitives=prims)

    sa = random_shell(0.0)
    sb = random_shell(float(rng.uniform(0.5, 2.5)))
    assert abs(_overlap_element(sa, sb)
               - cylindrical_pair_quadrature(sa, sb)) < 1e-8
    assert abs(_kinetic_element(sa, sb)
               - cylindrical_pair_quadrature(sa, sb, use_laplacian=True)) < 1e-8


# ------------------------------------------------------------------- integrals

def test_h2_overlap_offdiagonal_fixture():
    ints = build_integrals(h2(0.7414))
    ref = fixture_value("h2_0.7414_overlap_offdiag")
    assert abs(ints.overlap[0, 1] - ref) < 1e-8
    assert abs(ints.overlap[0, 1] - 0.6593) < 1e-3  # textbook cross-check


def test_integral_matrix_symmetries():
    ints = build_integrals(square_h4(1.5))
    for mat in (ints.overlap, ints.kinetic, ints.nuclear_attraction):
        assert np.allclose(mat, mat.T, atol=1e-14)
    evals = np.linalg.eigvalsh(ints.overlap)
    assert evals.min() > 0.0


def test_eri_eightfold_symmetry():
    eri = build_integrals(linear_h4(1.2)).eri
    perms = [(0, 1, 2, 3), (1, 0, 2, 3), (0, 1, 3, 2), (1, 0, 3, 2),
             (2, 3, 0, 1), (3, 2, 0, 1), (2, 3, 1, 0), (3, 2, 1, 0)]
    for p in perms:
        assert np.max(np.abs(eri - np.transpose(eri, p))) < 1e-12


def test_nuclear_repulsion_h2():
    ints = build_integrals(h2(0.7414))
    from qsubspace.constants import ANGSTROM_TO_BOHR
    assert abs(ints.nuclear_repulsion - 1.0 / (0.7414 * ANGSTROM_TO_BOHR)) < 1e-12


# ------------------------------------------------------------------------- SCF

def test_h2_rhf_vs_reference_fixture():
    ints = build_integrals(h2(0.7414))
    result = run_rhf(ints, 2)
    assert abs(result.total_energy - fixture_value("h2_0.7414_rhf_energy")) < 1e-6


def test_h4_square_rhf_vs_reference_fixture():
    ints = build_integrals(square_h4(1.5))
    result = run_rhf(ints, 4)
    assert abs(result.total_energy - fixture_value("h4_square_1.5_rhf_energy")) < 1e-6


def test_rhf_translation_invariance():
    e0 = run_rhf(build_integrals(square_h4(1.5)), 4).total_energy
    e1 = run_rhf(build_integrals(square_h4(1.5).translated(1.0, 2.0, 3.0)), 4).total_energy
    assert abs(e0 - e1) < 1e-10


def test_rhf_orbitals_orthonormal_and_density_idempotent():
    ints = build_integrals(linear_h4(2.0))
    r = run_rhf(ints, 4)
    C = r.mo_coefficients
    assert np.max(np.abs(C.T @ ints.overlap @ C - np.eye(ints.n_ao))) < 1e-8
    P = 2.0 * C[:, :r.n_occupied] @ C[:, :r.n_occupied].T
    assert np.max(np.abs(P @ ints.overlap @ P - 2.0 * P)) < 1e-6
    assert np.all(np.diff(r.orbital_energies) >= -1e-12)


def test_scf_energy_monotone_on_h2():
    trace = np.array(run_rhf(build_integrals(h2(0.7414)), 2).energy_trace)
    assert np.all(np.diff(trace) <= 1e-12)


def test_scf_nonconvergence_error_carries_trace():
    ints = build_integrals(square_h4(1.5))
    with pytest.raises(ScfConvergenceError) as excinfo:
        run_rhf(ints, 4, max_iterations=2)
    assert len(excinfo.value.trace) == 2


def test_rhf_input_validation():
    ints = build_integrals(h2(0.8))
    with pytest.raises(ValueError):
        run_rhf(ints, 3)
    with pytest.raises(ValueError):
        run_rhf(ints, 6)


def test_stretched_linear_h4_converges():
    r = run_rhf(build_integrals(linear_h4(5.0)), 4)
    assert abs(r.total_energy - (-1.1980501544)) < 1e-8


# -------------------------------------------------------------------- geometry

def test_geometry_validation():
    with pytest.raises(GeometryError):
        Geometry((("H", 0.0, 0.0, 0.0),))
    with pytest.raises(GeometryError):
        Geometry((("He", 0.0, 0.0, 0.0), ("H", 1.0, 0.0, 0.0)))
    with pytest.raises(GeometryError):
        Geometry((("H", 0.0, 0.0, 0.0), ("H", 0.0, 0.0, 1e-8)))


def test_geometry_file_roundtrip():
    geom = linear_h4(1.234567890123)
    text = format_geometry(geom)
    again = parse_geometry(text)
    assert again.atoms == geom.atoms  # lossless via repr floats


def test_geometry_parse_comments_and_errors():
    geom = parse_geometry("# header\nH 0 0 0  # origin\nH 0 0 0.9\n")
    assert geom.n_atoms == 2
    with pytest.raises(GeometryError):
        parse_geometry("H 0 0\nH 0 0 1\n")
    with pytest.raises(GeometryError):
        parse_geometry("H 0 0 zero\nH 0 0 1\n")


def test_builtin_families():
    sq = square_h4(1.5)
    dists = sorted(round(math.dist(a[1:], b[1:]), 6)
                   for i, a in enumerate(sq.atoms) for b in sq.atoms[i + 1:])
    assert dists[:4] == [1.5] * 4  # four edges
    lin = linear_h4(2.0)
    zs = [a[3] for a in lin.atoms]
    assert zs == [0.0, 2.0, 4.0, 6.0]
