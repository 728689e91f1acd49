"""Exact Ising-machine encoding of the minimal-basis H2 ground-state problem."""

from .exact_diag import eigenvalues, eigh
from .hamiltonian import (
    FermionTerm,
    FourQubitCoefficients,
    ReducedCoefficients,
    bravyi_kitaev,
    build_second_quantized,
    collect_f,
    computed_coefficients,
    fock_space_oracle,
    four_qubit_hamiltonian,
    load_table,
    reduce_to_two_qubits,
    table_provider,
)
from .integrals import DEFAULT_ZETA, boys_f0, build_mo_integrals
from .ising_map import (
    IsingCoefficients,
    RecoveryReport,
    apply_shift,
    closed_form_spectrum,
    recover_ground_energy,
    solve_molecule,
    to_ising_problem,
)
from .ising_solver import AnnealSchedule, IsingProblem, IsingSolution, solve_anneal, solve_brute
from .pauli import PauliOperator, PauliString, multiply, to_matrix

__version__ = "0.1.0"
