"""Exact Ising encoding of the two-qubit H2 Hamiltonian and energy recovery.

With ``H0 = g1 Z0 + g2 Z1 + g3 Z0Z1 + g4 (X0X1 + Y0Y1)`` the combination
``H1 = H0² + 2 g3 H0`` is diagonal:

    H1 = a1 + a2 (Z0 + Z1) + a3 Z0Z1

Its minimum ``Y`` gives back an eigenvalue of ``H0`` through
``x² + 2 g3 x = Y``. Raising ``g3`` above ``|g1| + |g2| + |g4|`` guarantees
that minimum comes from the lower odd-parity level ``-g3 - C``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

from .hamiltonian import ReducedCoefficients
from .ising_solver import AnnealSchedule, IsingProblem, IsingSolution, solve, solve_brute
from .pauli import PauliOperator

STRICT_MARGIN = 1e-6
DISCRIMINANT_TOL = 1e-9
SOLVER_TOL = 1e-6


class InconsistentInputError(ValueError):
    """The supplied Ising minimum is not attainable by ``H1``."""


class SolverMismatchError(RuntimeError):
    """A stochastic solver missed the exact Ising minimum."""


@dataclass(frozen=True)
class IsingCoefficients:
    a1: float
    a2: float
    a3: float
    g3_shifted: float
    delta: float

    @property
    def a(self) -> tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)


def gap_constant(g: ReducedCoefficients) -> float:
    """``C = sqrt((g1 - g2)² + 4 g4²)``; independent of ``g3``."""
    return math.hypot(g.g1 - g.g2, 2.0 * g.g4)


def shift_for(g: ReducedCoefficients) -> float:
    bound = abs(g.g1) + abs(g.g2) + abs(g.g4)
    if g.g3 > 0:
        return 0.0 if bound < g.g3 else bound
    return bound - g.g3 + STRICT_MARGIN


def a_coefficients(g1: float, g2: float, g3: float, g4: float) -> tuple[float, float, float]:
    a1 = g1 * g1 + g2 * g2 + g3 * g3 + 2.0 * g4 * g4
    a2 = 2.0 * (g1 + g2) * g3
    a3 = 2.0 * (g1 * g2 - g4 * g4 + g3 * g3)
    return a1, a2, a3


def apply_shift(g: ReducedCoefficients) -> IsingCoefficients:
    delta = shift_for(g)
    g3s = g.g3 + delta
    return IsingCoefficients(*a_coefficients(g.g1, g.g2, g3s, g.g4), g3_shifted=g3s, delta=delta)


def to_ising_problem(a: IsingCoefficients) -> IsingProblem:
    return IsingProblem(2, offset=a.a1, h=(a.a2, a.a2), J={(0, 1): a.a3})


def squared_operator(g: ReducedCoefficients, g3: float) -> PauliOperator:
    """``H0² + 2 g3 H0`` built by Pauli algebra, with ``g3`` in place of the original."""
    h0 = g.h0(g3)
    return h0 * h0 + 2.0 * g3 * h0


def ising_operator(a: IsingCoefficients) -> PauliOperator:
    return PauliOperator(2, {"II": a.a1, "ZI": a.a2, "IZ": a.a2, "ZZ": a.a3})


def closed_form_spectrum(g: ReducedCoefficients) -> tuple[float, float, float, float]:
    """Eigenvalues of ``H0`` (no ``g0``): ``|00>``, ``|11>`` and the odd-parity pair."""
    C = gap_constant(g)
    return (g.g1 + g.g2 + g.g3, -g.g1 - g.g2 + g.g3, -g.g3 - C, -g.g3 + C)


def exact_ground_energy(g: ReducedCoefficients) -> float:
    return g.g0 + min(closed_form_spectrum(g))


@dataclass
class RecoveryReport:
    y_min: float
    roots: tuple[float, float]
    x0: float
    C: float
    odd_sector_energy: float
    diagonal_energies: tuple[float, float]
    ground_energy: float
    delta: float
    g3_shifted: float
    g: tuple[float, float, float, float, float]
    a: tuple[float, float, float] | None = None
    spins: tuple[int, ...] | None = None
    solver: str | None = None
    seed: int | None = None
    y_brute: float | None = None
    solver_discrepancy: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def recover_ground_energy(g: ReducedCoefficients, y_min: float, delta: float) -> RecoveryReport:
    """Invert ``x² + 2 g3' x = Y`` and compare with the two diagonal levels."""
    g3s = g.g3 + delta
    disc = g3s * g3s + y_min
    if disc < -DISCRIMINANT_TOL:
        raise InconsistentInputError(
            f"Y={y_min} below the attainable minimum -g3'^2={-g3s * g3s} (discriminant {disc:.3e})"
        )
    root = math.sqrt(max(disc, 0.0))
    x1, x2 = -g3s - root, -g3s + root
    odd = x1 + delta
    diag = (g.g3 - g.g1 - g.g2, g.g3 + g.g1 + g.g2)
    return RecoveryReport(
        y_min=y_min,
        roots=(x1, x2),
        x0=x1,
        C=gap_constant(g),
        odd_sector_energy=odd,
        diagonal_energies=diag,
        ground_energy=g.g0 + min(odd, *diag),
        delta=delta,
        g3_shifted=g3s,
        g=g.g,
    )


def solve_molecule(g: ReducedCoefficients, solver: str = "brute", seed: int = 0,
                   schedule: AnnealSchedule | None = None) -> RecoveryReport:
    """Map to Ising, minimize with the chosen solver and recover the ground energy.

    A stochastic result is accepted only within ``SOLVER_TOL`` of the exact
    two-spin minimum; the solver's own value is used for recovery.
    """
    a = apply_shift(g)
    problem = to_ising_problem(a)
    sol: IsingSolution = solve(problem, solver, schedule, seed)
    exact = solve_brute(problem) if solver != "brute" else sol
    discrepancy = sol.energy - exact.energy
    if abs(discrepancy) > SOLVER_TOL:
        raise SolverMismatchError(f"{solver} returned Y={sol.energy}, exact minimum is {exact.energy}")
    report = recover_ground_energy(g, sol.energy, a.delta)
    report.a = a.a
    report.spins = sol.spins
    report.solver = solver
    report.seed = seed if solver == "anneal" else None
    report.y_brute = exact.energy
    report.solver_discrepancy = discrepancy
    return report
