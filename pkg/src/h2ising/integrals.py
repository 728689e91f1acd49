"""STO-6G integrals for H2 in a minimal basis.

Both nuclei sit on the z axis, atom A at the origin and atom B at ``(0, 0, R)``.
All lengths are in bohr and all energies in Hartree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

DEFAULT_ZETA = 1.24
SERIES_CUTOFF = 1e-6


class DegenerateBasisError(ValueError):
    """The two atomic orbitals are numerically linearly dependent."""


def boys_f0(t: float) -> float:
    """Zeroth-order Boys function ``F0(t) = ∫_0^1 exp(-t u²) du``."""
    if t < 0:
        raise ValueError(f"Boys function undefined for negative argument {t}")
    if t < SERIES_CUTOFF:
        return 1.0 - t / 3.0 + t * t / 10.0
    st = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * math.erf(st)


def primitive_norm(alpha: float) -> float:
    """Normalization constant of an s-type Gaussian ``exp(-alpha r²)``."""
    return (2.0 * alpha / math.pi) ** 0.75


def _gaussian_product(a, A, b, B):
    p = a + b
    mu = a * b / p
    AB2 = float(np.dot(A - B, A - B))
    P = (a * A + b * B) / p
    return p, mu, AB2, P


# Primitive integrals over unnormalized s Gaussians exp(-a|r-A|²).


def overlap_primitive(a, A, b, B) -> float:
    p, mu, AB2, _ = _gaussian_product(a, A, b, B)
    return (math.pi / p) ** 1.5 * math.exp(-mu * AB2)


def kinetic_primitive(a, A, b, B) -> float:
    p, mu, AB2, _ = _gaussian_product(a, A, b, B)
    return mu * (3.0 - 2.0 * mu * AB2) * (math.pi / p) ** 1.5 * math.exp(-mu * AB2)


def nuclear_primitive(a, A, b, B, C, Z=1.0) -> float:
    """Attraction ``<a| -Z/|r-C| |b>``."""
    p, mu, AB2, P = _gaussian_product(a, A, b, B)
    PC2 = float(np.dot(P - C, P - C))
    return -Z * 2.0 * math.pi / p * math.exp(-mu * AB2) * boys_f0(p * PC2)


def eri_primitive(a, A, b, B, c, C, d, D) -> float:
    """Chemists' notation ``(ab|cd)``."""
    p, mu, AB2, P = _gaussian_product(a, A, b, B)
    q, nu, CD2, Q = _gaussian_product(c, C, d, D)
    PQ2 = float(np.dot(P - Q, P - Q))
    pref = 2.0 * math.pi**2.5 / (p * q * math.sqrt(p + q))
    return pref * math.exp(-mu * AB2 - nu * CD2) * boys_f0(p * q / (p + q) * PQ2)


@lru_cache(maxsize=None)
def load_sto6g() -> tuple[tuple[float, float], ...]:
    """(exponent, coefficient) pairs of the STO-6G 1s expansion at zeta = 1."""
    text = resources.files("h2ising").joinpath("data/sto6g_h1s.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            a, c = line.split()
            rows.append((float(a), float(c)))
    return tuple(rows)


@dataclass
class ContractedGaussian:
    """Contracted s orbital; ``coefficients`` refer to normalized primitives."""

    center: np.ndarray
    exponents: np.ndarray
    coefficients: np.ndarray
    _weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.center = np.asarray(self.center, dtype=float)
        self.exponents = np.asarray(self.exponents, dtype=float)
        self.coefficients = np.asarray(self.coefficients, dtype=float)
        if np.any(self.exponents <= 0):
            raise ValueError("Gaussian exponents must be positive")
        w = self.coefficients * primitive_norm(self.exponents)
        self._weights = w
        self._weights = w / math.sqrt(_contract2(overlap_primitive, self, self))

    @classmethod
    def sto6g(cls, center, zeta: float = 1.0) -> "ContractedGaussian":
        if zeta <= 0:
            raise ValueError(f"zeta must be positive, got {zeta}")
        data = np.array(load_sto6g())
        return cls(center, data[:, 0] * zeta**2, data[:, 1])

    def primitives(self):
        return zip(self.exponents, self._weights)


def _contract2(fn, g1: ContractedGaussian, g2: ContractedGaussian, *args) -> float:
    total = 0.0
    for a, wa in g1.primitives():
        for b, wb in g2.primitives():
            total += wa * wb * fn(a, g1.center, b, g2.center, *args)
    return total


def overlap(g1, g2) -> float:
    return _contract2(overlap_primitive, g1, g2)


def kinetic(g1, g2) -> float:
    return _contract2(kinetic_primitive, g1, g2)


def nuclear(g1, g2, C, Z=1.0) -> float:
    return _contract2(nuclear_primitive, g1, g2, np.asarray(C, dtype=float), Z)


def eri(g1, g2, g3, g4) -> float:
    total = 0.0
    for a, wa in g1.primitives():
        for b, wb in g2.primitives():
            for c, wc in g3.primitives():
                for d, wd in g4.primitives():
                    w = wa * wb * wc * wd
                    total += w * eri_primitive(a, g1.center, b, g2.center, c, g3.center, d, g4.center)
    return total


@dataclass
class AOIntegrals:
    R: float
    S: float  # overlap between the two 1s orbitals
    T: np.ndarray
    V: np.ndarray
    eri: np.ndarray  # chemists' notation (pq|rs)

    @property
    def overlap_matrix(self) -> np.ndarray:
        return np.array([[1.0, self.S], [self.S, 1.0]])

    @property
    def core(self) -> np.ndarray:
        return self.T + self.V


def ao_integrals(R: float, zeta: float = DEFAULT_ZETA) -> AOIntegrals:
    if R <= 0:
        raise ValueError(f"bond length must be positive, got {R}")
    centers = [np.zeros(3), np.array([0.0, 0.0, R])]
    basis = [ContractedGaussian.sto6g(c, zeta) for c in centers]

    S = overlap(basis[0], basis[1])
    T = np.empty((2, 2))
    V = np.empty((2, 2))
    for i in range(2):
        for j in range(2):
            T[i, j] = kinetic(basis[i], basis[j])
            V[i, j] = sum(nuclear(basis[i], basis[j], C) for C in centers)

    g = np.empty((2, 2, 2, 2))
    done = {}
    for idx in np.ndindex(2, 2, 2, 2):
        p, q, r, s = idx
        key = min((p, q, r, s), (q, p, r, s), (p, q, s, r), (q, p, s, r),
                  (r, s, p, q), (s, r, p, q), (r, s, q, p), (s, r, q, p))
        if key not in done:
            done[key] = eri(*(basis[k] for k in key))
        g[idx] = done[key]
    return AOIntegrals(R=R, S=S, T=T, V=V, eri=g)


@dataclass
class SpinOrbitalIntegrals:
    """Spin-orbital integrals ordered (gα, gβ, uα, uβ).

    ``h2[i, j, k, l]`` is ``∫∫ χi*(1) χj*(2) χk(2) χl(1) / r12``, the
    coefficient of ``a_i† a_j† a_k a_l`` in ``½ Σ h_ijkl a_i† a_j† a_k a_l``.
    """

    h1: np.ndarray
    h2: np.ndarray
    e_nuc: float
    R: float | None = None
    zeta: float | None = None
    mo_core: np.ndarray | None = None
    mo_eri: np.ndarray | None = None

    def __getitem__(self, key):
        if len(key) == 2:
            return self.h1[key]
        return self.h2[key]


def mo_coefficients(S: float) -> np.ndarray:
    """Columns are the symmetry-adapted bonding (g) and antibonding (u) orbitals."""
    if not 1.0 - S > 1e-12:
        raise DegenerateBasisError(f"AO overlap {S} too close to 1")
    cg = 1.0 / math.sqrt(2.0 * (1.0 + S))
    cu = 1.0 / math.sqrt(2.0 * (1.0 - S))
    return np.array([[cg, cu], [cg, -cu]])


def spin_orbital_integrals(mo_core: np.ndarray, mo_eri: np.ndarray, e_nuc: float = 0.0,
                           **meta) -> SpinOrbitalIntegrals:
    """Expand spatial MO integrals to the four spin orbitals."""
    n = 2 * mo_core.shape[0]
    spatial = np.arange(n) // 2
    spin = np.arange(n) % 2
    same = spin[:, None] == spin[None, :]
    h1 = np.where(same, mo_core[np.ix_(spatial, spatial)], 0.0)
    # h_ijkl = (il|jk) with spin(i)=spin(l), spin(j)=spin(k)
    chem = mo_eri[np.ix_(spatial, spatial, spatial, spatial)]  # (pq|rs) over spin indices
    h2 = np.einsum("iljk->ijkl", chem)
    mask = same[:, None, None, :] & same[None, :, :, None]
    h2 = np.where(mask, h2, 0.0)
    return SpinOrbitalIntegrals(h1=h1, h2=h2, e_nuc=e_nuc, mo_core=mo_core, mo_eri=mo_eri, **meta)


def build_mo_integrals(R: float, zeta: float = DEFAULT_ZETA) -> SpinOrbitalIntegrals:
    ao = ao_integrals(R, zeta)
    C = mo_coefficients(ao.S)
    mo_core = C.T @ ao.core @ C
    mo_eri = np.einsum("pi,qj,rk,sl,pqrs->ijkl", C, C, C, C, ao.eri, optimize=True)
    return spin_orbital_integrals(mo_core, mo_eri, e_nuc=1.0 / R, R=R, zeta=zeta)
