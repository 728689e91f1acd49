"""Classical Ising-machine emulator: exhaustive search and simulated annealing.

Energies are ``offset + Σ h_i s_i + Σ_{i<j} J_ij s_i s_j`` with ``s_i = ±1``.
Spin ``+1`` is the σ_z eigenvalue +1, i.e. qubit basis state ``|0>``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numba
import numpy as np

MAX_BRUTE_SPINS = 24
TIE_TOL = 1e-12


class ScheduleError(ValueError):
    pass


class ProblemFormatError(ValueError):
    pass


@dataclass(frozen=True)
class IsingProblem:
    n: int
    offset: float = 0.0
    h: tuple[float, ...] = ()
    J: dict[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise ValueError("spin count must be non-negative")
        h = tuple(float(x) for x in self.h) if len(self.h) else (0.0,) * n
        if len(h) != n:
            raise ValueError(f"h has {len(h)} entries for {n} spins")
        J = {}
        for (i, j), v in dict(self.J).items():
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-coupling J[{i},{j}] not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"coupling ({i}, {j}) outside 0..{n - 1}")
            key = (min(i, j), max(i, j))
            J[key] = J.get(key, 0.0) + float(v)
        values = [float(self.offset), *h, *J.values()]
        if not all(math.isfinite(v) for v in values):
            raise ValueError("Ising coefficients must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "offset", float(self.offset))
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "J", J)

    @property
    def scale(self) -> float:
        """Largest field or coupling magnitude (the offset does not count)."""
        return max((abs(v) for v in (*self.h, *self.J.values())), default=0.0)

    def coupling_matrix(self) -> np.ndarray:
        """Symmetric dense ``J`` with zero diagonal."""
        M = np.zeros((self.n, self.n))
        for (i, j), v in self.J.items():
            M[i, j] = M[j, i] = v
        return M

    def energy(self, spins) -> float:
        s = np.asarray(spins, dtype=float)
        if s.shape != (self.n,):
            raise ValueError(f"expected {self.n} spins, got shape {s.shape}")
        e = self.offset + float(np.dot(self.h, s)) if self.n else self.offset
        for (i, j), v in self.J.items():
            e += v * s[i] * s[j]
        return float(e)

    def energies(self, configs: np.ndarray) -> np.ndarray:
        """Vectorized energy over rows of a ``(m, n)`` spin array."""
        configs = np.asarray(configs, dtype=float)
        e = self.offset + configs @ np.asarray(self.h, dtype=float)
        for (i, j), v in self.J.items():
            e = e + v * configs[:, i] * configs[:, j]
        return e

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "offset": self.offset,
            "h": list(self.h),
            "J": [[i, j, v] for (i, j), v in sorted(self.J.items())],
        }

    @classmethod
    def from_dict(cls, d) -> "IsingProblem":
        if not isinstance(d, dict):
            raise ProblemFormatError("problem must be a JSON object")
        if "n" not in d:
            raise ProblemFormatError("missing field 'n'")
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ProblemFormatError(f"field 'n': expected non-negative integer, got {n!r}")
        offset = d.get("offset", 0.0)
        if not isinstance(offset, (int, float)) or isinstance(offset, bool):
            raise ProblemFormatError(f"field 'offset': expected number, got {offset!r}")
        h = d.get("h", [0.0] * n)
        if not isinstance(h, list) or len(h) != n:
            raise ProblemFormatError(f"field 'h': expected list of {n} numbers")
        for k, x in enumerate(h):
            if not isinstance(x, (int, float)) or isinstance(x, bool):
                raise ProblemFormatError(f"field 'h[{k}]': expected number, got {x!r}")
        J = {}
        raw = d.get("J", [])
        if not isinstance(raw, list):
            raise ProblemFormatError("field 'J': expected list of [i, j, value] triples")
        for k, entry in enumerate(raw):
            if not (isinstance(entry, list) and len(entry) == 3):
                raise ProblemFormatError(f"field 'J[{k}]': expected [i, j, value]")
            i, j, v = entry
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)):
                raise ProblemFormatError(f"field 'J[{k}]': indices must be integers")
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ProblemFormatError(f"field 'J[{k}]': value must be a number")
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ProblemFormatError(f"field 'J[{k}]': invalid pair ({i}, {j}) for n={n}")
            key = (min(i, j), max(i, j))
            J[key] = J.get(key, 0.0) + v
        try:
            return cls(n, offset, tuple(h), J)
        except ValueError as exc:
            raise ProblemFormatError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "IsingProblem":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProblemFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return cls.from_dict(d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class IsingSolution:
    spins: tuple[int, ...]
    energy: float
    method: str
    seed: int | None = None

    def to_dict(self) -> dict:
        return {"spins": list(self.spins), "energy": self.energy, "method": self.method, "seed": self.seed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _tie_tol(p: IsingProblem) -> float:
    # relative to the largest possible |energy| so tiny problems are not all ties
    return TIE_TOL * (abs(p.offset) + sum(map(abs, p.h)) + sum(map(abs, p.J.values())))


def _spins_for(indices: np.ndarray, n: int) -> np.ndarray:
    # spin 0 is the most significant bit so index order is lexicographic order
    shifts = np.arange(n - 1, -1, -1)
    bits = (indices[:, None] >> shifts[None, :]) & 1
    return (2 * bits - 1).astype(np.int8)


def solve_brute(p: IsingProblem, chunk: int = 1 << 16) -> IsingSolution:
    """Exact minimum by enumerating all ``2**n`` configurations.

    Ties (within ``TIE_TOL`` relative to the coefficient sum) go to the
    lexicographically smallest spin vector, ordering -1 before +1.
    """
    if p.n > MAX_BRUTE_SPINS:
        raise ValueError(f"{p.n} spins exceeds the brute-force limit of {MAX_BRUTE_SPINS}")
    if p.n == 0:
        return IsingSolution((), p.offset, "brute")
    total = 1 << p.n
    best_e = math.inf
    best_idx = -1
    tol = _tie_tol(p)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        e = p.energies(_spins_for(idx, p.n))
        k = int(np.argmin(e))
        if e[k] < best_e - tol:
            # earliest index in this chunk that ties with the new minimum
            k = int(np.flatnonzero(e <= e[k] + tol)[0])
            best_e, best_idx = float(e[k]), int(idx[k])
    spins = tuple(int(s) for s in _spins_for(np.array([best_idx]), p.n)[0])
    return IsingSolution(spins, p.energy(spins), "brute")


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric temperature ladder, one temperature per sweep.

    ``t_start=None`` means ``5 * max|h, J|`` of the problem being solved.
    """

    t_start: float | None = None
    t_end: float = 1e-3
    sweeps: int = 10_000
    restarts: int = 20

    def temperatures(self, p: IsingProblem) -> np.ndarray:
        t0 = self.t_start if self.t_start is not None else 5.0 * p.scale
        if self.t_start is None and t0 <= self.t_end:
            # trivial or tiny problems: keep the ladder well-formed
            t0 = max(self.t_end * 10.0, 1.0)
        if not (self.t_end > 0 and t0 > self.t_end):
            raise ScheduleError(f"need t_start > t_end > 0, got t_start={t0}, t_end={self.t_end}")
        if self.sweeps < 1 or self.restarts < 1:
            raise ScheduleError("sweeps and restarts must be positive")
        if self.sweeps == 1:
            return np.array([t0])
        return t0 * (self.t_end / t0) ** (np.arange(self.sweeps) / (self.sweeps - 1))


@numba.njit(cache=True)
def _anneal_run(J, h, spins, temps, uniforms):
    n = spins.shape[0]
    field = h.copy()
    for i in range(n):
        for j in range(n):
            field[i] += J[i, j] * spins[j]
    e = 0.0
    for i in range(n):
        e += h[i] * spins[i]
        for j in range(i + 1, n):
            e += J[i, j] * spins[i] * spins[j]
    best = spins.copy()
    best_e = e
    for k in range(temps.shape[0]):
        beta = 1.0 / temps[k]
        for i in range(n):
            dE = -2.0 * spins[i] * field[i]
            if dE <= 0.0 or uniforms[k, i] < math.exp(-beta * dE):
                s_new = -spins[i]
                spins[i] = s_new
                e += dE
                for j in range(n):
                    field[j] += 2.0 * s_new * J[j, i]
                if e < best_e - 1e-12:
                    best_e = e
                    best[:] = spins
    return best


def solve_anneal(p: IsingProblem, schedule: AnnealSchedule | None = None, seed: int = 0) -> IsingSolution:
    """Metropolis single-spin-flip annealing; best configuration seen over all restarts.

    Each restart draws from its own PCG64 stream spawned from ``seed``, so
    results are reproducible and restarts are independent.
    """
    schedule = schedule or AnnealSchedule()
    temps = schedule.temperatures(p)
    if p.n == 0:
        return IsingSolution((), p.offset, "anneal", seed)
    J = p.coupling_matrix()
    h = np.asarray(p.h, dtype=float)
    best = None
    tol = _tie_tol(p)
    for child in np.random.SeedSequence(seed).spawn(schedule.restarts):
        rng = np.random.Generator(np.random.PCG64(child))
        init = rng.choice(np.array([-1.0, 1.0]), size=p.n)
        uniforms = rng.random((temps.shape[0], p.n))
        spins = _anneal_run(J, h, init, temps, uniforms)
        cand = tuple(int(s) for s in spins)
        e = p.energy(cand)
        if best is None or e < best[0] - tol or (abs(e - best[0]) <= tol and cand < best[1]):
            best = (e, cand)
    return IsingSolution(best[1], best[0], "anneal", seed)


def solve(p: IsingProblem, method: str = "brute", schedule: AnnealSchedule | None = None,
          seed: int = 0) -> IsingSolution:
    if method == "brute":
        return solve_brute(p)
    if method == "anneal":
        return solve_anneal(p, schedule, seed)
    raise ValueError(f"unknown solver {method!r}")
