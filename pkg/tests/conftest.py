import numpy as np
import pytest

from scrollcodes.code import build_code
from scrollcodes.gf import FieldSpec
from scrollcodes.scroll import ScrollSpec, standard_fiber_bases


def make_code(field, exponents, s=None, mode="identity", seed=None, points=None):
    spec = ScrollSpec(field, tuple(exponents))
    pts = tuple(range(field.q if s is None else s)) if points is None else tuple(points)
    return build_code(spec, standard_fiber_bases(spec, pts, mode, seed))


@pytest.fixture(scope="session")
def gf5():
    return FieldSpec.prime(5)


@pytest.fixture(scope="session")
def gf4():
    return FieldSpec(2, 2, (1, 1, 1))


@pytest.fixture(scope="session")
def gf9():
    return FieldSpec.of_order(3, 2)


@pytest.fixture(scope="session")
def quadric(gf5):
    """The [10, 4] directrix code on the quadric scroll (1, 1) over GF(5)."""
    return make_code(gf5, (1, 1), 5)


@pytest.fixture(scope="session")
def rs53(gf5):
    return make_code(gf5, (2,), 5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


SMALL_FIELDS = ["2", "3", "2^2", "5", "7", "2^3", "3^2", "2^4", "11", "13"]


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
