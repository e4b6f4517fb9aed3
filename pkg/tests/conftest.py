import functools

import pytest

from rennerhecke.catalog import rook_data
from rennerhecke.hecke import HeckeAlgebra
from rennerhecke.renner import RennerMonoid


@functools.lru_cache(maxsize=None)
def rook(n):
    return RennerMonoid(rook_data(n))


@functools.lru_cache(maxsize=None)
def hecke(n):
    return HeckeAlgebra(rook(n))


@pytest.fixture
def r2():
    return rook(2)


@pytest.fixture
def r3():
    return rook(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
