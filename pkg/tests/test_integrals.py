import math

import numpy as np
import pytest
from scipy import integrate

from h2ising.integrals import (
    ContractedGaussian,
    DegenerateBasisError,
    ao_integrals,
    boys_f0,
    build_mo_integrals,
    eri,
    kinetic,
    load_sto6g,
    mo_coefficients,
    nuclear,
    overlap,
    overlap_primitive,
    primitive_norm,
)

# Oracle values frozen from scipy.integrate.quad of ∫_0^1 exp(-t u²) du.
BOYS_QUAD = {1.0: 0.7468241328124271, 0.5: 0.855624391892149, 10.0: 0.28024739050664277}


def test_boys_small_and_series():
    assert boys_f0(0.0) == 1.0
    t = 5e-7
    assert boys_f0(t) == pytest.approx(integrate.quad(lambda u: math.exp(-t * u * u), 0, 1)[0], abs=1e-15)
    with pytest.raises(ValueError):
        boys_f0(-1e-3)


@pytest.mark.parametrize("t, expected", sorted(BOYS_QUAD.items()))
def test_boys_against_quadrature(t, expected):
    assert boys_f0(t) == pytest.approx(expected, abs=1e-12)
    assert integrate.quad(lambda u: math.exp(-t * u * u), 0, 1, epsabs=1e-14)[0] == pytest.approx(expected, abs=1e-13)


def test_boys_large_argument():
    assert boys_f0(30.0) == pytest.approx(0.5 * math.sqrt(math.pi / 30.0), abs=1e-9)


def test_normalized_primitive_overlap_same_center():
    a = 0.8
    assert primitive_norm(a) ** 2 * overlap_primitive(a, np.zeros(3), a, np.zeros(3)) == pytest.approx(1.0, abs=1e-14)


def test_normalized_primitive_overlap_quadrature():
    # exp(-R² ab/(a+b)) = e^-0.5 for a = b = 1, R = 1
    a = b = 1.0
    R = 1.0
    closed = primitive_norm(a) * primitive_norm(b) * overlap_primitive(a, np.zeros(3), b, np.array([0, 0, R]))
    # separable 3-D quadrature: two transverse factors and one along the bond
    perp = integrate.quad(lambda x: math.exp(-(a + b) * x * x), -np.inf, np.inf)[0]
    along = integrate.quad(lambda z: math.exp(-a * z * z - b * (z - R) ** 2), -np.inf, np.inf)[0]
    oracle = primitive_norm(a) * primitive_norm(b) * perp * perp * along
    assert oracle == pytest.approx(0.6065306597126334, abs=1e-10)
    assert closed == pytest.approx(oracle, abs=1e-10)


def _radial_density(g):
    """Normalized |g(r)|² about its own center as a function of r."""
    def rho(r):
        val = sum(w * math.exp(-a * r * r) for a, w in g.primitives())
        return val * val
    return rho


def test_nuclear_attraction_shell_theorem():
    g = ContractedGaussian.sto6g(np.zeros(3), 1.24)
    rho = _radial_density(g)
    for d in (0.0, 0.7, 1.4, 3.0):
        if d == 0.0:
            oracle = integrate.quad(lambda r: 4 * math.pi * r * rho(r), 0, np.inf, epsabs=1e-13)[0]
        else:
            inner = integrate.quad(lambda r: 4 * math.pi * r * r * rho(r), 0, d, epsabs=1e-13)[0]
            outer = integrate.quad(lambda r: 4 * math.pi * r * rho(r), d, np.inf, epsabs=1e-13)[0]
            oracle = inner / d + outer
        assert -nuclear(g, g, [0, 0, d]) == pytest.approx(oracle, abs=1e-9)


def test_coulomb_self_energy_shell_theorem():
    g = ContractedGaussian.sto6g(np.zeros(3), 1.0)
    rho = _radial_density(g)

    def potential(r):
        inner = integrate.quad(lambda s: 4 * math.pi * s * s * rho(s), 0, r, epsabs=1e-13)[0]
        outer = integrate.quad(lambda s: 4 * math.pi * s * rho(s), r, np.inf, epsabs=1e-13)[0]
        return inner / r + outer

    oracle = integrate.quad(lambda r: 4 * math.pi * r * r * rho(r) * potential(r), 0, 30, epsabs=1e-12, limit=200)[0]
    assert eri(g, g, g, g) == pytest.approx(oracle, abs=1e-8)
    # STO-6G ζ=1 approximates the Slater value 5/8
    assert eri(g, g, g, g) == pytest.approx(0.625, abs=5e-3)


def test_szabo_ostlund_sto3g_reference():
    # STO-3G (ζ = 1.24) H2 at R = 1.4 bohr, literature values to 4 decimals
    ex = [0.168856, 0.623913, 3.42525]
    co = [0.444635, 0.535328, 0.154329]
    A = ContractedGaussian([0, 0, 0], ex, co)
    B = ContractedGaussian([0, 0, 1.4], ex, co)
    assert overlap(A, B) == pytest.approx(0.6593, abs=1e-4)
    assert kinetic(A, A) == pytest.approx(0.7600, abs=1e-4)
    assert kinetic(A, B) == pytest.approx(0.2365, abs=1e-4)
    assert nuclear(A, A, [0, 0, 0]) == pytest.approx(-1.2266, abs=1e-4)
    assert nuclear(A, A, [0, 0, 1.4]) == pytest.approx(-0.6538, abs=1e-4)
    assert nuclear(A, B, [0, 0, 0]) == pytest.approx(-0.5974, abs=1e-4)
    assert eri(A, A, A, A) == pytest.approx(0.7746, abs=1e-4)
    assert eri(A, A, B, B) == pytest.approx(0.5697, abs=1e-4)
    assert eri(B, A, A, A) == pytest.approx(0.4441, abs=1e-4)
    assert eri(B, A, B, A) == pytest.approx(0.2970, abs=1e-4)


def test_basis_file():
    data = load_sto6g()
    assert len(data) == 6
    for zeta in (1.0, 1.24, 2.0):
        g = ContractedGaussian.sto6g(np.zeros(3), zeta)
        assert overlap(g, g) == pytest.approx(1.0, abs=1e-10)


def test_zeta_scaling():
    # lengths scale as 1/ζ: S(R; ζ) = S(ζR; 1), T scales as ζ², Coulomb terms as ζ
    z, R = 1.24, 1.4
    a = ao_integrals(R, z)
    b = ao_integrals(R * z, 1.0)
    assert a.S == pytest.approx(b.S, abs=1e-12)
    assert np.allclose(a.T, z * z * b.T, atol=1e-12)
    assert np.allclose(a.V, z * b.V, atol=1e-12)
    assert np.allclose(a.eri, z * b.eri, atol=1e-12)


def test_swap_symmetry_and_eri_symmetry():
    a = ao_integrals(1.4)
    P = [1, 0]
    assert np.allclose(a.T, a.T[np.ix_(P, P)], atol=1e-12)
    assert np.allclose(a.V, a.V[np.ix_(P, P)], atol=1e-12)
    assert np.allclose(a.eri, a.eri[np.ix_(P, P, P, P)], atol=1e-12)
    g = a.eri
    for perm in ("qprs", "pqsr", "rspq", "srqp"):
        assert np.allclose(g, np.einsum(f"pqrs->{perm}", g), atol=1e-10)


def test_overlap_monotone_and_limits():
    grid = np.linspace(0.4, 5.0, 47)
    S = np.array([ao_integrals(R).S for R in grid])
    assert np.all((S > 0) & (S < 1))
    assert np.all(np.diff(S) < 0)
    assert ao_integrals(1e-4).S == pytest.approx(1.0, abs=1e-6)
    assert ao_integrals(40.0).S < 1e-12


def test_domain_errors():
    with pytest.raises(ValueError):
        build_mo_integrals(0.0)
    with pytest.raises(ValueError):
        build_mo_integrals(1.4, zeta=-1.0)
    with pytest.raises(DegenerateBasisError):
        mo_coefficients(1.0)


def test_mo_orthonormal():
    a = ao_integrals(1.4)
    C = mo_coefficients(a.S)
    assert np.allclose(C.T @ a.overlap_matrix @ C, np.eye(2), atol=1e-12)


def test_spin_orbital_structure():
    ints = build_mo_integrals(1.4)
    assert np.allclose(ints.h1, np.diag(np.diag(ints.h1)), atol=1e-12)
    assert ints.e_nuc == pytest.approx(1 / 1.4)
    spin = np.arange(4) % 2
    for i, j, k, l in np.ndindex(4, 4, 4, 4):
        if spin[i] != spin[l] or spin[j] != spin[k]:
            assert ints.h2[i, j, k, l] == 0.0
    # Coulomb and exchange pieces used by the Hamiltonian
    J_gu = ints.mo_eri[0, 0, 1, 1]
    K_gu = ints.mo_eri[0, 1, 0, 1]
    assert ints[0, 2, 2, 0] == pytest.approx(J_gu)
    assert ints[0, 2, 0, 2] == pytest.approx(K_gu)
    assert ints[0, 1, 3, 2] == pytest.approx(K_gu)
    assert ints[0, 3, 1, 2] == pytest.approx(K_gu)
    # (gu|gg) vanishes by inversion symmetry
    assert abs(ints.mo_eri[0, 1, 0, 0]) < 1e-12
