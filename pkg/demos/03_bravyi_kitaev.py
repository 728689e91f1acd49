"""
Four qubits down to two
=======================

Second-quantized H2, its Bravyi-Kitaev image and the two-qubit reduction.
"""
import numpy as np

from h2ising import (
    bravyi_kitaev,
    build_second_quantized,
    build_mo_integrals,
    collect_f,
    fock_space_oracle,
    reduce_to_two_qubits,
    to_matrix,
)

ints = build_mo_integrals(1.4)
terms = build_second_quantized(ints)
print(len(terms), "fermionic terms")

h4 = bravyi_kitaev(terms)
print(len(h4), "Pauli strings on 4 qubits")

# The qubit operator and the Fock-space matrix share a spectrum.
w_bk = np.linalg.eigvalsh(to_matrix(h4))
w_fock = np.linalg.eigvalsh(fock_space_oracle(terms))
print("spectra agree:", np.allclose(w_bk, w_fock, atol=1e-10))

# Qubits 1 and 3 only appear through Z, so fix them to +1.
f = collect_f(h4 + ints.e_nuc)
g = reduce_to_two_qubits(f, R=1.4)
print("f =", np.round(f.as_tuple(), 4))
print("g =", np.round(g.g, 4))
