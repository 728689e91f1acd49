"""
Pauli algebra
=============

Multiply Pauli strings, build operators and check them against dense matrices.
Qubit 0 is the rightmost tensor factor.
"""
import numpy as np

from h2ising import PauliOperator, PauliString, multiply, table_provider, to_matrix

# XY = iZ on a single qubit; the phase is kept as a power of i.
p = multiply(PauliString("X"), PauliString("Y"))
print("X * Y =", p.phase_value, p.letters)

# (XX + YY)^2 collapses to 2 II - 2 ZZ.
flip = PauliOperator(2, {"XX": 1.0, "YY": 1.0})
print("(XX + YY)^2 =", (flip * flip).to_dict()["terms"])

# The two-qubit H2 Hamiltonian at R = 1.4 bohr, without the constant g0.
h0 = table_provider(1.4).h0()
print("H0 =", {t["string"]: t["re"] for t in h0.to_dict()["terms"]})
w = np.linalg.eigvalsh(to_matrix(h0))
print("H0 spectrum:", np.round(w, 5))
