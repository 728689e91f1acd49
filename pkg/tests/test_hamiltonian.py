import numpy as np
import pytest

from h2ising.exact_diag import eigenvalues
from h2ising.hamiltonian import (
    F_SUPPORT,
    FermionTerm,
    FourQubitCoefficients,
    StructureError,
    UnsupportedModeError,
    bravyi_kitaev,
    build_second_quantized,
    coefficients,
    collect_f,
    computed_coefficients,
    fock_ladder,
    fock_space_oracle,
    four_qubit_hamiltonian,
    general_second_quantized,
    ladder_operator,
    load_table,
    parse_table,
    reduce_to_two_qubits,
    table_provider,
)
from h2ising.integrals import SpinOrbitalIntegrals, build_mo_integrals
from h2ising.pauli import PauliOperator, to_matrix

from .oracles import ground_from_closed_form, random_template_integrals


def number(m):
    return FermionTerm(1.0, ((m, True), (m, False)))


@pytest.fixture(scope="module")
def ints14():
    return build_mo_integrals(1.4)


def test_empty_and_single_term():
    zero = SpinOrbitalIntegrals(np.zeros((4, 4)), np.zeros((4,) * 4), 0.0)
    assert build_second_quantized(zero) == []
    h1 = np.zeros((4, 4))
    h1[0, 0] = 2.0
    terms = build_second_quantized(SpinOrbitalIntegrals(h1, np.zeros((4,) * 4), 0.0))
    assert terms == [FermionTerm(2.0, ((0, True), (0, False)))]


def test_number_operator_mapping():
    op = bravyi_kitaev([FermionTerm(2.0, ((0, True), (0, False)))])
    assert op == PauliOperator(4, {"IIII": 1.0, "ZIII": -1.0})
    oracle = fock_space_oracle([FermionTerm(2.0, ((0, True), (0, False)))])
    assert np.allclose(np.linalg.eigvalsh(to_matrix(op)), np.linalg.eigvalsh(oracle), atol=1e-12)


@pytest.mark.parametrize("i", range(4))
@pytest.mark.parametrize("j", range(4))
def test_bk_canonical_anticommutation(i, j):
    a_i, a_j_dag = ladder_operator(i, False), ladder_operator(j, True)
    anti = a_i * a_j_dag + a_j_dag * a_i
    assert anti == (PauliOperator.identity(4) if i == j else PauliOperator(4))
    a_j = ladder_operator(j, False)
    assert len(a_i * a_j + a_j * a_i) == 0


def test_unsupported_mode():
    with pytest.raises(UnsupportedModeError):
        bravyi_kitaev([FermionTerm(1.0, ((4, True), (4, False)))])
    with pytest.raises(UnsupportedModeError):
        fock_space_oracle([FermionTerm(1.0, ((5, False),))])


def test_fock_oracle_basics():
    n0 = fock_space_oracle([number(0)])
    assert np.allclose(n0, np.diag([(s & 1) for s in range(16)]))
    a0, a0d, a1d = fock_ladder(0, False), fock_ladder(0, True), fock_ladder(1, True)
    assert np.allclose(a0 @ a0d + a0d @ a0, np.eye(16))
    assert np.allclose(a0 @ a1d + a1d @ a0, 0)


def test_eq16_template_is_complete(ints14):
    # the symmetry-reduced term list has the same spectrum as the unrestricted sum
    full = fock_space_oracle(general_second_quantized(ints14))
    reduced = fock_space_oracle(build_second_quantized(ints14))
    assert np.allclose(full, reduced, atol=1e-12)


def test_bk_spectrum_matches_fock(ints14):
    terms = build_second_quantized(ints14)
    op = bravyi_kitaev(terms)
    assert op.is_hermitian(1e-12)
    w_bk = eigenvalues(to_matrix(op))
    w_fock = eigenvalues(fock_space_oracle(terms))
    assert np.abs(w_bk - w_fock).max() < 1e-10


def test_eq18_pattern(ints14):
    op = four_qubit_hamiltonian(ints14)
    assert set(op.terms) == {s for ss in F_SUPPORT.values() for s in ss}
    f = collect_f(op)
    assert np.allclose(to_matrix(f.to_operator()), to_matrix(op), atol=1e-12)


def test_collect_f_edge_cases():
    assert collect_f(PauliOperator(4)) == FourQubitCoefficients()
    assert collect_f(PauliOperator.identity(4, 0.7)) == FourQubitCoefficients(f0=0.7)
    with pytest.raises(StructureError):
        collect_f(PauliOperator(4, {"XIII": 0.1}))
    with pytest.raises(StructureError):
        collect_f(PauliOperator(4, {"ZIII": 0.1, "ZZII": 0.2}))


def test_reduce_hand_substitution():
    assert reduce_to_two_qubits(FourQubitCoefficients()).g == (0, 0, 0, 0, 0)
    f = FourQubitCoefficients(f0=1, f1=0.1, f3=0.2, f4=0.3, f7=0.4, f6=0.5)
    g = reduce_to_two_qubits(f)
    assert g.g == pytest.approx((1, 0.2, 0.4, 1.4, 1.0), abs=1e-15)


def test_reduction_constant_absorbs_sector_terms():
    f = FourQubitCoefficients(f0=0.1, f2=0.2, f5=0.3)
    assert reduce_to_two_qubits(f).g0 == pytest.approx(0.6)


@pytest.mark.parametrize("R", [0.6, 1.4, 3.1])
def test_reduction_preserves_ground_state(R):
    op = four_qubit_hamiltonian(build_mo_integrals(R))
    g = reduce_to_two_qubits(collect_f(op))
    assert ground_from_closed_form(g) == pytest.approx(eigenvalues(to_matrix(op))[0], abs=1e-10)


def test_random_template_spectra(rng):
    for _ in range(10):
        terms = build_second_quantized(random_template_integrals(rng))
        w_bk = eigenvalues(to_matrix(bravyi_kitaev(terms)))
        w_fock = eigenvalues(fock_space_oracle(terms))
        assert np.abs(w_bk - w_fock).max() < 1e-10


def test_computed_coefficients_match_table_at_equilibrium(table_rows):
    g = computed_coefficients(1.4)
    row = table_provider(1.4)
    assert np.abs(np.subtract(g.g, row.g)).max() < 2e-3
    assert g.g3 > 0 and g.g4 > 0


def test_computed_energy_reproduces_table_one_row_down(table_rows):
    # energies printed in row k+1 belong to the g values of row k
    for k in (0, 16, 30, 49):
        g = computed_coefficients(table_rows[k].R)
        assert ground_from_closed_form(g) == pytest.approx(table_rows[k + 1].exact, abs=1e-4)


@pytest.mark.parametrize("R, g", [
    (0.6, (1.5943, 0.5132, -1.1008, 0.6598, 0.0809)),
    (1.4, (0.2376, 0.3463, -0.4431, 0.5734, 0.0907)),
    (3.1, (-0.2421, 0.1733, -0.036, 0.4273, 0.1193)),
])
def test_table_provider(R, g):
    assert table_provider(R).g == g
    assert coefficients(R, "table").g == g


def test_table_provider_rejects_off_grid():
    with pytest.raises(KeyError):
        table_provider(1.41)
    with pytest.raises(ValueError):
        coefficients(1.4, "guess")


def test_table_fixture(table_rows):
    assert len(table_rows) == 51
    assert [r.R for r in table_rows] == pytest.approx(np.round(np.arange(0.6, 3.1001, 0.05), 2))
    assert all(r.g3 > 0 and r.g4 > 0 for r in table_rows)
    assert load_table() == table_rows


def test_parse_table_errors():
    with pytest.raises(ValueError):
        parse_table("R,g0\n1,2\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_table("R,g0,g1,g2,g3,g4,exact,simulated\n1,2,3,x,5,6,7,8\n")
