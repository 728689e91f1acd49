"""Command-line driver: ``h2ising {single,curve,table-check,ising-solve}``.

Exit codes: 0 success, 1 invalid input, 2 tolerance failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .exact_diag import eigenvalues
from .hamiltonian import (
    coefficients,
    four_qubit_hamiltonian,
    load_table,
)
from .integrals import DEFAULT_ZETA, build_mo_integrals
from .ising_map import solve_molecule
from .ising_solver import AnnealSchedule, IsingProblem, ProblemFormatError, ScheduleError, solve
from .pauli import to_matrix

EXIT_OK, EXIT_INVALID, EXIT_TOLERANCE = 0, 1, 2
CURVE_HEADER = ("R", "exact", "simulated", "diff")
TABLE_TOL = 1e-4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _schedule(args) -> AnnealSchedule:
    base = AnnealSchedule()
    return AnnealSchedule(
        t_start=args.t_start,
        t_end=args.t_end if args.t_end is not None else base.t_end,
        sweeps=args.sweeps if args.sweeps is not None else base.sweeps,
        restarts=args.restarts if args.restarts is not None else base.restarts,
    )


def single_point(R: float, source: str = "table", zeta: float = DEFAULT_ZETA, solver: str = "anneal",
                 seed: int = 0, schedule: AnnealSchedule | None = None) -> dict:
    """Full pipeline at one bond length; returns a flat record."""
    g = coefficients(R, source, zeta)
    report = solve_molecule(g, solver, seed, schedule)
    exact = float(eigenvalues(to_matrix(g.operator()))[0])
    rec = {
        "R": R,
        "source": source,
        "zeta": zeta if source == "computed" else None,
        "g": list(g.g),
        "delta": report.delta,
        "a": list(report.a),
        "Y": report.y_min,
        "spins": list(report.spins),
        "solver": solver,
        "seed": report.seed,
        "simulated": report.ground_energy,
        "exact": exact,
        "diff": report.ground_energy - exact,
    }
    if source == "computed":
        op = four_qubit_hamiltonian(build_mo_integrals(R, zeta))
        rec["exact_four_qubit"] = float(eigenvalues(to_matrix(op))[0])
    return rec


def r_grid(start: float, stop: float, step: float) -> list[float]:
    if not step > 0:
        raise UsageError(f"R step must be positive, got {step}")
    if start > stop:
        raise UsageError(f"R start {start} exceeds stop {stop}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 10) for k in range(count)]


def _curve_row(job) -> dict:
    R, kw = job
    rec = single_point(R, **kw)
    return {k: rec[k] for k in CURVE_HEADER}


def curve(grid, jobs: int = 1, **kw) -> list[dict]:
    """Curve records in ``grid`` order; ``jobs > 1`` uses a process pool."""
    work = [(R, kw) for R in grid]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_curve_row, work))
    return [_curve_row(w) for w in work]


def curve_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for r in rows:
        w.writerow([f"{r['R']:g}", f"{r['exact']:.4f}", f"{r['simulated']:.4f}", f"{r['diff']:.1e}"])
    return buf.getvalue()


def curve_svg(rows, width: int = 640, height: int = 400) -> str:
    """Minimal line chart of exact (line) and simulated (markers) energies."""
    R = np.array([r["R"] for r in rows], dtype=float)
    E = np.array([r["exact"] for r in rows], dtype=float)
    S = np.array([r["simulated"] for r in rows], dtype=float)
    pad = 50
    x0, x1 = R.min(), R.max() if R.max() > R.min() else R.min() + 1.0
    lo, hi = min(E.min(), S.min()), max(E.max(), S.max())
    if hi == lo:
        hi = lo + 1.0

    def px(r):
        return pad + (r - x0) / (x1 - x0) * (width - 2 * pad)

    def py(e):
        return height - pad - (e - lo) / (hi - lo) * (height - 2 * pad)

    line = " ".join(f"{px(r):.2f},{py(e):.2f}" for r, e in zip(R, E))
    dots = "\n".join(f'<circle cx="{px(r):.2f}" cy="{py(e):.2f}" r="3" fill="none" stroke="#c0392b"/>'
                     for r, e in zip(R, S))
    return f"""<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">
<rect width="100%" height="100%" fill="white"/>
<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>
<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>
<text x="{width / 2}" y="{height - 12}" text-anchor="middle" font-size="13">R (bohr)</text>
<text x="14" y="{height / 2}" font-size="13" transform="rotate(-90 14 {height / 2})" text-anchor="middle">E (Hartree)</text>
<text x="{pad}" y="{height - pad + 16}" font-size="11" text-anchor="middle">{x0:g}</text>
<text x="{width - pad}" y="{height - pad + 16}" font-size="11" text-anchor="middle">{x1:g}</text>
<text x="{pad - 4}" y="{py(lo):.2f}" font-size="11" text-anchor="end">{lo:.4f}</text>
<text x="{pad - 4}" y="{py(hi):.2f}" font-size="11" text-anchor="end">{hi:.4f}</text>
<polyline points="{line}" fill="none" stroke="#2c3e50" stroke-width="1.5"/>
{dots}
</svg>
"""


def table_check(rows, tol: float = TABLE_TOL, solver: str = "brute", seed: int = 0,
                schedule: AnnealSchedule | None = None) -> dict:
    """Recompute both energy columns from each row's g values."""
    out = []
    for row in rows:
        g = row.coefficients
        exact = float(eigenvalues(to_matrix(g.operator()))[0])
        sim = solve_molecule(g, solver, seed, schedule).ground_energy
        dev = max(abs(exact - row.exact), abs(sim - row.simulated))
        out.append({"R": row.R, "exact": exact, "simulated": sim,
                    "table_exact": row.exact, "table_simulated": row.simulated,
                    "deviation": dev, "ok": dev <= tol})
    worst = max(r["deviation"] for r in out)
    return {"rows": out, "max_deviation": worst, "passed": sum(r["ok"] for r in out),
            "total": len(out), "tolerance": tol, "ok": all(r["ok"] for r in out)}


def _emit(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _pipeline_kw(args) -> dict:
    return {"source": args.coeffs, "zeta": args.zeta, "solver": args.solver,
            "seed": args.seed, "schedule": _schedule(args)}


def cmd_single(args) -> int:
    rec = single_point(args.R, **_pipeline_kw(args))
    if args.format == "json":
        _emit(_dump(rec), args.out)
    else:
        _emit(curve_csv([rec]), args.out)
    if args.out not in (None, "-"):
        print(f"R={rec['R']:g}  simulated={rec['simulated']:.4f}  exact={rec['exact']:.4f}  "
              f"diff={rec['diff']:.1e}")
    return EXIT_OK


def cmd_curve(args) -> int:
    grid = r_grid(args.R_start, args.R_stop, args.R_step)
    rows = curve(grid, jobs=args.jobs, **_pipeline_kw(args))
    _emit(_dump(rows) if args.format == "json" else curve_csv(rows), args.out)
    if args.svg:
        _emit(curve_svg(rows), args.svg)
    return EXIT_OK


def cmd_table_check(args) -> int:
    try:
        rows = load_table(args.fixture)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read fixture: {exc}") from None
    res = table_check(rows, args.tolerance, args.solver, args.seed, _schedule(args))
    if args.format == "json":
        _emit(_dump(res), args.out)
    else:
        lines = []
        for r in res["rows"]:
            flag = "ok  " if r["ok"] else "FAIL"
            lines.append(f"{flag} R={r['R']:<5g} exact={r['exact']:.4f} ({r['table_exact']:.4f})  "
                         f"simulated={r['simulated']:.4f} ({r['table_simulated']:.4f})  dev={r['deviation']:.1e}")
        lines.append(f"{res['passed']}/{res['total']} rows within {res['tolerance']:g}; "
                     f"max deviation {res['max_deviation']:.2e}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if res["ok"] else EXIT_TOLERANCE


def cmd_ising(args) -> int:
    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read problem file: {exc}") from None
    problem = IsingProblem.from_json(text)
    sol = solve(problem, args.solver, _schedule(args), args.seed)
    _emit(_dump(sol.to_dict()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="h2ising", description="H2 ground state through an exact Ising encoding.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default="json"):
        p.add_argument("--solver", choices=("brute", "anneal"), default="anneal")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--t-start", type=float, default=None, help="annealing start temperature")
        p.add_argument("--t-end", type=float, default=None)
        p.add_argument("--sweeps", type=int, default=None)
        p.add_argument("--restarts", type=int, default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)

    def coeffs(p):
        p.add_argument("--coeffs", choices=("computed", "table"), default="table")
        p.add_argument("--zeta", type=float, default=DEFAULT_ZETA, help="Slater exponent scale")

    p = sub.add_parser("single", help="one bond length")
    p.add_argument("--R", type=float, required=True, help="bond length in bohr")
    coeffs(p)
    common(p)
    p.set_defaults(func=cmd_single)

    p = sub.add_parser("curve", help="dissociation curve over a range of R")
    p.add_argument("--R-start", dest="R_start", type=float, default=0.6)
    p.add_argument("--R-stop", dest="R_stop", type=float, default=3.1)
    p.add_argument("--R-step", dest="R_step", type=float, default=0.05)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--svg", default=None, help="also write an SVG line chart")
    coeffs(p)
    common(p, "csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("table-check", help="recompute the reference table energies")
    p.add_argument("--fixture", default=None, help="CSV fixture (default: shipped table)")
    p.add_argument("--tolerance", type=float, default=TABLE_TOL)
    common(p, "csv")
    p.set_defaults(func=cmd_table_check, solver="brute")

    p = sub.add_parser("ising-solve", help="solve an Ising problem JSON file")
    p.add_argument("problem", help="problem JSON path, or - for stdin")
    common(p)
    p.set_defaults(func=cmd_ising, solver="brute")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ProblemFormatError, ScheduleError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"h2ising {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
