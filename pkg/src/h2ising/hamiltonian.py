"""Second-quantized H2 Hamiltonian, its Bravyi-Kitaev qubit form and the
two-qubit reduction.

Spin orbitals are ordered (gα, gβ, uα, uβ) -> modes (0, 1, 2, 3). Under the
four-mode Bravyi-Kitaev encoding qubit 1 stores the parity of modes 0-1 and
qubit 3 the parity of all four modes, so both are constants of motion.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import astuple, dataclass, fields
from functools import lru_cache
from importlib import resources
from typing import Iterable, NamedTuple

import numpy as np

from .integrals import DEFAULT_ZETA, SpinOrbitalIntegrals, build_mo_integrals
from .pauli import PauliOperator

N_MODES = 4
STRUCTURE_TOL = 1e-10


class StructureError(ValueError):
    """A qubit operator does not have the expected H2 Pauli support."""


class UnsupportedModeError(ValueError):
    """Fermionic mode outside the hard-coded four-mode encoding."""


class FermionTerm(NamedTuple):
    """``coeff`` times a product of ladder operators, applied right to left.

    Each entry of ``ops`` is ``(mode, dagger)``; ``((0, True), (0, False))``
    is the number operator ``a0† a0``.
    """

    coeff: float
    ops: tuple[tuple[int, bool], ...]

    def __str__(self):
        body = " ".join(f"a{m}{'†' if d else ''}" for m, d in self.ops)
        return f"{self.coeff:+.6g} {body}"


def _ops(*spec: int) -> tuple[tuple[int, bool], ...]:
    """Two-body ladder string ``a_i† a_j† a_k a_l`` from indices (i, j, k, l)."""
    half = len(spec) // 2
    return tuple((m, True) for m in spec[:half]) + tuple((m, False) for m in spec[half:])


def build_second_quantized(ints: SpinOrbitalIntegrals, tol: float = 0.0) -> list[FermionTerm]:
    """Term list of the minimal-basis H2 Hamiltonian (nuclear repulsion excluded).

    Only the symmetry-allowed terms appear: the four number operators, the
    six density-density pairs (same-spin pairs carry the exchange
    correction) and the two Hermitian double-excitation pairs.
    """
    h = ints.h1
    v = ints.h2
    spec = [
        (h[0, 0], (0, 0)),
        (h[1, 1], (1, 1)),
        (h[2, 2], (2, 2)),
        (h[3, 3], (3, 3)),
        (v[0, 1, 1, 0], (0, 1, 1, 0)),
        (v[2, 3, 3, 2], (2, 3, 3, 2)),
        (v[0, 3, 3, 0], (0, 3, 3, 0)),
        (v[1, 2, 2, 1], (1, 2, 2, 1)),
        (v[0, 2, 2, 0] - v[0, 2, 0, 2], (0, 2, 2, 0)),
        (v[1, 3, 3, 1] - v[1, 3, 1, 3], (1, 3, 3, 1)),
        (v[0, 1, 3, 2], (0, 1, 3, 2)),
        (v[0, 1, 3, 2], (2, 3, 1, 0)),
        (v[0, 3, 1, 2], (0, 3, 1, 2)),
        (v[0, 3, 1, 2], (2, 1, 3, 0)),
    ]
    return [FermionTerm(float(c), _ops(*idx)) for c, idx in spec if abs(c) > tol]


def general_second_quantized(ints: SpinOrbitalIntegrals, tol: float = 1e-14) -> list[FermionTerm]:
    """Unrestricted ``Σ h_ij a_i†a_j + ½ Σ h_ijkl a_i†a_j†a_k a_l`` over all nonzero integrals."""
    n = ints.h1.shape[0]
    terms = []
    for i, j in np.ndindex(n, n):
        if abs(ints.h1[i, j]) > tol:
            terms.append(FermionTerm(float(ints.h1[i, j]), _ops(i, j)))
    for i, j, k, l in np.ndindex(n, n, n, n):
        c = ints.h2[i, j, k, l]
        if abs(c) > tol and i != j and k != l:
            terms.append(FermionTerm(0.5 * float(c), _ops(i, j, k, l)))
    return terms


@lru_cache(maxsize=None)
def _bk_table() -> dict[tuple[int, bool], PauliOperator]:
    def P(ops, c=1.0):
        return PauliOperator.single(N_MODES, ops, c)

    creation = {
        0: 0.5 * (P({3: "X", 1: "X", 0: "X"}) - 1j * P({3: "X", 1: "X", 0: "Y"})),
        1: 0.5 * (P({3: "X", 1: "X", 0: "Z"}) - 1j * P({3: "X", 1: "Y"})),
        2: 0.5 * (P({3: "X", 2: "X", 1: "Z"}) - 1j * P({3: "X", 2: "Y", 1: "Z"})),
        3: 0.5 * (P({3: "X", 2: "Z", 1: "Z"}) - 1j * P({3: "Y"})),
    }
    table = {}
    for m, op in creation.items():
        table[m, True] = op
        table[m, False] = op.dagger()
    return table


def ladder_operator(mode: int, dagger: bool) -> PauliOperator:
    """Bravyi-Kitaev image of ``a_mode`` (or ``a_mode†``) on four qubits."""
    if not 0 <= mode < N_MODES:
        raise UnsupportedModeError(f"mode {mode} outside 0..{N_MODES - 1}")
    return _bk_table()[mode, bool(dagger)]


def bravyi_kitaev(terms: Iterable[FermionTerm]) -> PauliOperator:
    out = PauliOperator(N_MODES)
    for term in terms:
        prod = PauliOperator.identity(N_MODES, term.coeff)
        for mode, dagger in term.ops:
            prod = prod * ladder_operator(mode, dagger)
        out = out + prod
    return out


def fock_ladder(mode: int, dagger: bool, n_modes: int = N_MODES) -> np.ndarray:
    """Ladder matrix in the occupation basis ``|f_{n-1} ... f_0>``.

    Basis index is ``Σ f_j 2**j``; the fermionic sign counts occupied modes
    with lower index.
    """
    dim = 2**n_modes
    m = np.zeros((dim, dim))
    for state in range(dim):
        occ = (state >> mode) & 1
        if occ == int(dagger):
            continue
        sign = (-1) ** bin(state & ((1 << mode) - 1)).count("1")
        m[state ^ (1 << mode), state] = sign
    return m


def fock_space_oracle(terms: Iterable[FermionTerm], n_modes: int = N_MODES) -> np.ndarray:
    """Dense Hamiltonian built directly from occupation-number matrices."""
    dim = 2**n_modes
    H = np.zeros((dim, dim))
    for term in terms:
        prod = term.coeff * np.eye(dim)
        for mode, dagger in term.ops:
            if not 0 <= mode < n_modes:
                raise UnsupportedModeError(f"mode {mode} outside 0..{n_modes - 1}")
            prod = prod @ fock_ladder(mode, dagger, n_modes)
        H += prod
    return H


# Pauli strings (qubit 0 first) carrying each of f0..f7.
F_SUPPORT: dict[str, tuple[str, ...]] = {
    "f0": ("IIII",),
    "f1": ("ZIII", "ZZII"),
    "f2": ("IZII",),
    "f3": ("IIZI", "IZZZ"),
    "f4": ("ZIZI", "ZIZZ"),
    "f5": ("IZIZ",),
    "f6": ("XZXI", "YZYI", "XZXZ", "YZYZ"),
    "f7": ("ZZZI", "ZZZZ"),
}


@dataclass(frozen=True)
class FourQubitCoefficients:
    f0: float = 0.0
    f1: float = 0.0
    f2: float = 0.0
    f3: float = 0.0
    f4: float = 0.0
    f5: float = 0.0
    f6: float = 0.0
    f7: float = 0.0

    def to_operator(self) -> PauliOperator:
        terms = {}
        for name, strings in F_SUPPORT.items():
            for s in strings:
                terms[s] = getattr(self, name)
        return PauliOperator(N_MODES, terms)

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)


def collect_f(op: PauliOperator, tol: float = STRUCTURE_TOL) -> FourQubitCoefficients:
    """Read f0..f7 from a four-qubit H2 operator, checking the shared-coefficient pattern."""
    if op.n != N_MODES:
        raise StructureError(f"expected a {N_MODES}-qubit operator, got {op.n}")
    coeffs = op.real_terms()
    known = {s for strings in F_SUPPORT.values() for s in strings}
    stray = {s: c for s, c in coeffs.items() if s not in known and abs(c) > tol}
    if stray:
        raise StructureError(f"unexpected Pauli strings: {stray}")
    values = {}
    for name, strings in F_SUPPORT.items():
        vals = [coeffs.get(s, 0.0) for s in strings]
        if max(vals) - min(vals) > tol:
            raise StructureError(f"{name} strings disagree: {dict(zip(strings, vals))}")
        values[name] = vals[0]
    return FourQubitCoefficients(**values)


@dataclass(frozen=True)
class ReducedCoefficients:
    """Coefficients of ``g0 + g1 Z0 + g2 Z1 + g3 Z0Z1 + g4 (X0X1 + Y0Y1)``."""

    g0: float
    g1: float
    g2: float
    g3: float
    g4: float
    R: float | None = None

    @property
    def g(self) -> tuple[float, float, float, float, float]:
        return (self.g0, self.g1, self.g2, self.g3, self.g4)

    def h0(self, g3: float | None = None) -> PauliOperator:
        """Two-qubit operator without the constant ``g0``; ``g3`` may be overridden."""
        g3 = self.g3 if g3 is None else g3
        return PauliOperator(2, {
            "ZI": self.g1, "IZ": self.g2, "ZZ": g3, "XX": self.g4, "YY": self.g4,
        })

    def operator(self) -> PauliOperator:
        return self.h0() + self.g0


def reduce_to_two_qubits(f: FourQubitCoefficients, R: float | None = None) -> ReducedCoefficients:
    """Restrict to the sector Z1 = Z3 = +1 and relabel qubits (0, 2) -> (0, 1).

    That sector holds the two-electron singlet states built from gα gβ and
    uα uβ. The constant picks up the Z1 and Z1Z3 coefficients there, so
    ``g0 = f0 + f2 + f5``.
    """
    return ReducedCoefficients(
        g0=f.f0 + f.f2 + f.f5,
        g1=2.0 * f.f1,
        g2=2.0 * f.f3,
        g3=2.0 * (f.f4 + f.f7),
        g4=2.0 * f.f6,
        R=R,
    )


def four_qubit_hamiltonian(ints: SpinOrbitalIntegrals) -> PauliOperator:
    """Qubit Hamiltonian including nuclear repulsion in the identity term."""
    return bravyi_kitaev(build_second_quantized(ints)) + ints.e_nuc


def computed_coefficients(R: float, zeta: float = DEFAULT_ZETA) -> ReducedCoefficients:
    ints = build_mo_integrals(R, zeta)
    return reduce_to_two_qubits(collect_f(four_qubit_hamiltonian(ints)), R=R)


@dataclass(frozen=True)
class TableRow:
    R: float
    g0: float
    g1: float
    g2: float
    g3: float
    g4: float
    exact: float
    simulated: float

    @property
    def coefficients(self) -> ReducedCoefficients:
        return ReducedCoefficients(self.g0, self.g1, self.g2, self.g3, self.g4, R=self.R)


TABLE_COLUMNS = tuple(f.name for f in fields(TableRow))


def parse_table(text: str) -> list[TableRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != TABLE_COLUMNS:
        raise ValueError(f"table header must be {','.join(TABLE_COLUMNS)}, got {reader.fieldnames}")
    rows = []
    for lineno, rec in enumerate(reader, start=2):
        try:
            values = {k: float(rec[k]) for k in TABLE_COLUMNS}
        except (TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not all(math.isfinite(v) for v in values.values()):
            raise ValueError(f"line {lineno}: non-finite value")
        rows.append(TableRow(**values))
    if not rows:
        raise ValueError("table has no rows")
    return rows


@lru_cache(maxsize=None)
def _shipped_table() -> tuple[TableRow, ...]:
    text = resources.files("h2ising").joinpath("data/table1.csv").read_text()
    return tuple(parse_table(text))


def load_table(path=None) -> list[TableRow]:
    """Reference rows (R, g0..g4, exact, simulated); the shipped fixture by default."""
    if path is None:
        return list(_shipped_table())
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def table_provider(R: float, rows: Iterable[TableRow] | None = None) -> ReducedCoefficients:
    """Exact table row at bond length ``R``; no interpolation."""
    for row in rows if rows is not None else _shipped_table():
        if abs(row.R - R) < 1e-9:
            return row.coefficients
    raise KeyError(f"R={R} is not a tabulated bond length")


def coefficients(R: float, source: str = "table", zeta: float = DEFAULT_ZETA) -> ReducedCoefficients:
    if source == "table":
        return table_provider(R)
    if source == "computed":
        return computed_coefficients(R, zeta)
    raise ValueError(f"unknown coefficient source {source!r}")
