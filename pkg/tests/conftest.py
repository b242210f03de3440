from fractions import Fraction

import pytest

from nonconvex.geom import Polygon, pt


def F(a, b=1):
    return Fraction(a, b)


def square(x0=0, y0=0, s=1):
    return Polygon([pt(x0, y0), pt(x0 + s, y0), pt(x0 + s, y0 + s), pt(x0, y0 + s)])


def lshape():
    return Polygon([pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)])


def regular_even(n):
    """Rational centrally symmetric convex polygon with n (even) vertices."""
    from nonconvex.gallery import _ngon
    return Polygon(_ngon(n, 100))


@pytest.fixture
def unit_square():
    return square()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
