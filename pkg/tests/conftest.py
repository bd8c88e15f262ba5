import pytest

from fewweight.gf import FieldSpec

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def field():
    cache = {}

    def get(p, m, **kwargs):
        key = (p, m, tuple(sorted(kwargs.items())))
        if key not in cache:
            cache[key] = FieldSpec(p, m, **kwargs)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
