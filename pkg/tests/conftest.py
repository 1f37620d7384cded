import random
import sys

import pytest

from ncdigraphs import ScoreTable


def random_table(n, rng, lo=-5, hi=5):
    return ScoreTable(n, {
        (u, v): float(rng.randint(lo, hi))
        for u in range(1, n + 1) for v in range(1, n + 1) if u != v
    })


@pytest.fixture
def rng():
    return random.Random(20140812)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
