import random

import pytest
from hypothesis import strategies as st

from dynnikov import DynnikovCoordinates, ExtendedCoordinates, extend

# Coordinates and states taken from the worked example of the algorithm.
GOLDEN = DynnikovCoordinates(6, (-1, -2, -2, 1), (-1, 2, -2, 2))


def ext(a, b):
    return ExtendedCoordinates.from_pairs(a, b)


def random_coords(rng, n, bound):
    while True:
        a = tuple(rng.randint(-bound, bound) for _ in range(n - 2))
        b = tuple(rng.randint(-bound, bound) for _ in range(n - 2))
        if any(a) or any(b):
            return DynnikovCoordinates(n, a, b)


@st.composite
def coordinates(draw, min_n=3, max_n=8, bound=20):
    n = draw(st.integers(min_n, max_n))
    ints = st.integers(-bound, bound)
    a = draw(st.lists(ints, min_size=n - 2, max_size=n - 2))
    b = draw(st.lists(ints, min_size=n - 2, max_size=n - 2))
    if not any(a) and not any(b):
        a[0] = draw(st.integers(1, bound))
    return DynnikovCoordinates(n, tuple(a), tuple(b))


@st.composite
def extended_coordinates(draw, min_n=3, max_n=8, bound=20):
    return extend(draw(coordinates(min_n, max_n, bound)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
