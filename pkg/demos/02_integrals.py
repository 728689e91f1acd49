"""
Minimal-basis integrals
=======================

STO-6G hydrogen 1s functions, closed-form Gaussian integrals and the
choice of Slater exponent.
"""
import numpy as np

from h2ising.hamiltonian import computed_coefficients, table_provider
from h2ising.integrals import ao_integrals, build_mo_integrals

R = 1.4
ao = ao_integrals(R)
print(f"R = {R}: overlap S = {ao.S:.4f}")
print("core Hamiltonian (AO):\n", np.round(ao.core, 4))

# Spin-orbital integrals in the (g alpha, g beta, u alpha, u beta) order.
ints = build_mo_integrals(R)
print("orbital energies (core):", np.round(np.diag(ints.h1)[::2], 4))
print("nuclear repulsion:", round(ints.e_nuc, 4))

# The tabulated coefficients are only reproduced with a scaled exponent.
row = table_provider(R)
for zeta in (1.0, 1.24):
    g = computed_coefficients(R, zeta)
    print(f"zeta = {zeta}: max |g - table| = {np.abs(np.subtract(g.g, row.g)).max():.1e}")
