"""Pauli-string algebra with exact phase tracking.

Strings are written qubit 0 first, e.g. ``"XIZ"`` is X on qubit 0 and Z on
qubit 2. Dense matrices use qubit 0 as the least-significant bit of the
basis index, so ``to_matrix`` builds ``P[n-1] ⊗ ... ⊗ P[0]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Number

import numpy as np

PRUNE_TOL = 1e-14
MAX_MATRIX_QUBITS = 10

LETTERS = "IXYZ"

# (a, b) -> (phase exponent k, letter) such that a·b = i**k · letter
_PRODUCT = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}

_PHASES = (1, 1j, -1, -1j)

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class DimensionError(ValueError):
    """Operands act on different numbers of qubits."""


class ResourceError(ValueError):
    """Requested dense object would be too large."""


@dataclass(frozen=True)
class PauliString:
    """A tensor product of single-qubit Paulis times a phase ``i**phase``."""

    letters: str
    phase: int = 0

    def __post_init__(self):
        if any(c not in LETTERS for c in self.letters):
            raise ValueError(f"invalid Pauli letters {self.letters!r}")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_sparse(cls, n: int, ops: dict[int, str]) -> "PauliString":
        letters = ["I"] * n
        for q, c in ops.items():
            if not 0 <= q < n:
                raise DimensionError(f"qubit {q} outside 0..{n - 1}")
            letters[q] = c
        return cls("".join(letters))

    @property
    def qubit_count(self) -> int:
        return len(self.letters)

    @property
    def phase_value(self) -> complex:
        return _PHASES[self.phase]

    @property
    def weight(self) -> int:
        return sum(c != "I" for c in self.letters)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __str__(self):
        prefix = ("", "i", "-", "-i")[self.phase]
        return prefix + self.letters


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Product ``a·b`` as a single Pauli string with accumulated phase."""
    if a.qubit_count != b.qubit_count:
        raise DimensionError(f"cannot multiply {a.qubit_count}- and {b.qubit_count}-qubit strings")
    k = a.phase + b.phase
    out = []
    for ca, cb in zip(a.letters, b.letters):
        dk, c = _PRODUCT[ca, cb]
        k += dk
        out.append(c)
    return PauliString("".join(out), k)


class PauliOperator:
    """Complex-weighted sum of Pauli strings on a fixed number of qubits.

    Terms are kept in canonical form: the phase of each string is folded
    into its coefficient and coefficients below ``PRUNE_TOL`` are dropped.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[str, complex] | None = None):
        self.n = int(n)
        self.terms: dict[str, complex] = {}
        for letters, c in (terms or {}).items():
            if len(letters) != self.n:
                raise DimensionError(f"string {letters!r} does not act on {self.n} qubits")
            self._accumulate(letters, complex(c))
        self._prune()

    @classmethod
    def identity(cls, n: int, coeff: complex = 1.0) -> "PauliOperator":
        return cls(n, {"I" * n: coeff})

    @classmethod
    def from_string(cls, s: PauliString | str, coeff: complex = 1.0) -> "PauliOperator":
        if isinstance(s, str):
            s = PauliString(s)
        return cls(s.qubit_count, {s.letters: coeff * s.phase_value})

    @classmethod
    def single(cls, n: int, ops: dict[int, str], coeff: complex = 1.0) -> "PauliOperator":
        return cls.from_string(PauliString.from_sparse(n, ops), coeff)

    def _accumulate(self, letters: str, c: complex):
        self.terms[letters] = self.terms.get(letters, 0.0) + c

    def _prune(self, tol: float = PRUNE_TOL):
        self.terms = {k: v for k, v in self.terms.items() if abs(v) > tol}
        return self

    def _check(self, other: "PauliOperator"):
        if self.n != other.n:
            raise DimensionError(f"operators act on {self.n} and {other.n} qubits")

    def copy(self) -> "PauliOperator":
        return PauliOperator(self.n, dict(self.terms))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def coefficient(self, letters: str) -> complex:
        return self.terms.get(letters, 0.0)

    def __add__(self, other):
        if isinstance(other, Number):
            other = PauliOperator.identity(self.n, other)
        self._check(other)
        out = PauliOperator(self.n, dict(self.terms))
        for k, v in other.terms.items():
            out._accumulate(k, v)
        return out._prune()

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return PauliOperator(self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = PauliOperator(self.n)
        for ka, va in self.terms.items():
            sa = PauliString(ka)
            for kb, vb in other.terms.items():
                p = multiply(sa, PauliString(kb))
                out._accumulate(p.letters, va * vb * p.phase_value)
        return out._prune()

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = PauliOperator.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def dagger(self) -> "PauliOperator":
        return PauliOperator(self.n, {k: np.conj(v) for k, v in self.terms.items()})

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(v.imag) <= tol for v in self.terms.values())

    def real_terms(self, tol: float = 1e-12) -> dict[str, float]:
        """Coefficients as floats; raises if any imaginary part exceeds ``tol``."""
        if not self.is_hermitian(tol):
            bad = max(abs(v.imag) for v in self.terms.values())
            raise ValueError(f"operator is not Hermitian (max |imag| = {bad:.3e})")
        return {k: v.real for k, v in self.terms.items()}

    def to_matrix(self) -> np.ndarray:
        return to_matrix(self)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"string": k, "re": float(v.real), "im": float(v.imag)}
                for k, v in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PauliOperator":
        return cls(d["n"], {t["string"]: complex(t["re"], t.get("im", 0.0)) for t in d["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> "PauliOperator":
        return cls.from_dict(json.loads(s))

    def __repr__(self):
        if not self.terms:
            return f"PauliOperator({self.n}, 0)"
        body = " + ".join(f"({v:.6g}) {k}" for k, v in sorted(self.terms.items()))
        return f"PauliOperator({self.n}, {body})"


def string_matrix(letters: str) -> np.ndarray:
    m = np.ones((1, 1), dtype=complex)
    for c in letters:
        # qubit 0 is the least-significant factor, so later qubits go on the left
        m = np.kron(_SINGLE[c], m)
    return m


def to_matrix(op: PauliOperator | PauliString) -> np.ndarray:
    """Dense ``2**n × 2**n`` matrix of an operator or string."""
    if isinstance(op, PauliString):
        op = PauliOperator.from_string(op)
    if op.n > MAX_MATRIX_QUBITS:
        raise ResourceError(f"{op.n} qubits exceeds dense limit of {MAX_MATRIX_QUBITS}")
    dim = 2**op.n
    m = np.zeros((dim, dim), dtype=complex)
    for letters, c in op.terms.items():
        m += c * string_matrix(letters)
    return m
