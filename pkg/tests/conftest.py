import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ccnsim.topology import generate_random_graph  # noqa: E402


def random_small_graphs(count, max_n=8, seed=2024):
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(count):
        n = int(rng.integers(3, max_n + 1))
        m = int(rng.integers(n - 1, n * (n - 1) // 2 + 1))
        graphs.append(generate_random_graph(n, m, rng))
    return graphs


@pytest.fixture(scope="session")
def small_graphs():
    return random_small_graphs(40)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
