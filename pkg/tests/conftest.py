import numpy as np
import pytest

from phasebell.fock import custom_coeffs

# (criterion, ok, detail) lines recorded by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_state(rng, s, normalized=True):
    c = rng.normal(size=s + 1)
    if normalized:
        c /= np.linalg.norm(c)
    return custom_coeffs(c)
