import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from solvcore.groups import cross_checking
from solvcore.words import Word

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def words(rank=2, max_size=10):
    letters = st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, max_size=max_size).map(lambda ls: Word(tuple(ls)))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(autouse=True)
def _cross_check():
    # both wreath decision paths run and must agree everywhere in the suite
    with cross_checking():
        yield
