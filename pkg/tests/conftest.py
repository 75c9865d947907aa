import numpy as np
import pytest

from critqg.initial import generate_initial

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def random_field():
    def make(n_max=8, seed=0, k_hi=None, slope=-1.0, amplitude=1.0):
        k_hi = n_max if k_hi is None else k_hi
        return generate_initial(f"random-band(1,{k_hi},{slope})", amplitude, n_max, seed)
    return make
