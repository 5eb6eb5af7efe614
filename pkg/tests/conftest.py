from functools import lru_cache

import pytest

from fewweight.construction import build_code, derive_spec
from fewweight.field import build_field

# (p, m, N) instances used throughout; every divisor N for the m = 2 fields
GRID = (
    [(3, 2, N) for N in (1, 2, 4, 8)]
    + [(3, 3, 1)]
    + [(5, 2, N) for N in (1, 2, 3, 4, 6, 8, 12, 24)]
    + [(7, 2, 3)]
)

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def field(p, m):
    return build_field(p, m)


@lru_cache(maxsize=None)
def spec_for(p, m, N):
    return derive_spec(field(p, m), N)


@lru_cache(maxsize=None)
def code_for(p, m, N):
    return build_code(spec_for(p, m, N))


@pytest.fixture
def F9():
    return field(3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
