import numpy as np
import pytest

from h2ising.hamiltonian import load_table


@pytest.fixture(scope="session")
def table_rows():
    return load_table()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    from tests.acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (len(k), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {detail}")
