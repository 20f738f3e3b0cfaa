import pytest
from hypothesis import settings

from kstable.twisted import algebra_for

settings.register_profile("kstable", deadline=None, max_examples=40)
settings.load_profile("kstable")


@pytest.fixture(scope="session")
def algebras():
    cache = {}

    def get(label):
        if label not in cache:
            cache[label] = algebra_for(label)
        return cache[label]
    return get


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, summary_lines
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in summary_lines():
            terminalreporter.write_line(line)
