import numpy as np
import pytest

ACCEPTANCE_RESULTS = []

EX1_A = np.array([[1.0, -1.0], [0.0, 1.0]])
EX1_DELTA = np.ones((2, 2))
EX2_A = np.array([[-2.0, 2.0, 0.0], [2.0, -5.0, 3.0], [0.0, 3.0, -7.0]])
EX2_DELTA = np.ones((3, 3))


def random_instance(rng, n, max_cond=1e2):
    """Well-conditioned A and an entrywise positive rank-one Delta."""
    while True:
        A = rng.normal(size=(n, n))
        if np.linalg.cond(A) < max_cond:
            break
    Delta = np.outer(rng.uniform(0.1, 1.0, n), rng.uniform(0.1, 1.0, n))
    return A, Delta


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
