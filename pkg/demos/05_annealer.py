"""
Simulated annealing
===================

The Metropolis annealer on a dense 12-spin glass, compared with brute force.
"""
import time

import numpy as np

from h2ising import AnnealSchedule, IsingProblem, solve_anneal, solve_brute

rng = np.random.default_rng(3)
n = 12
J = {(i, j): rng.uniform(-1, 1) for i in range(n) for j in range(i + 1, n)}
p = IsingProblem(n, 0.0, tuple(rng.uniform(-1, 1, n)), J)

best = solve_brute(p)
print("brute force:", round(best.energy, 6), best.spins)

# The first call compiles the kernel, so keep it out of the timings.
solve_anneal(p, AnnealSchedule(sweeps=10, restarts=1))

for sweeps in (100, 1000, 10000):
    t0 = time.perf_counter()
    sol = solve_anneal(p, AnnealSchedule(sweeps=sweeps), seed=0)
    print(f"{sweeps:>6} sweeps: {sol.energy:.6f} in {time.perf_counter() - t0:.2f}s")
