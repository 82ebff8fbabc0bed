import os
import sys
from fractions import Fraction

import pytest

from alexinv.words import GroupPresentation, Word

HERE = os.path.dirname(__file__)
if HERE not in sys.path:
    sys.path.insert(0, HERE)


def pres(n, *rels):
    return GroupPresentation(n, tuple(Word.from_letters(r) for r in rels))


@pytest.fixture
def trefoil():
    # <a, b | aba = bab>
    return pres(2, [1, 2, 1, -2, -1, -2])


@pytest.fixture
def figure_eight():
    # <x, y | y x y^-1 x y = x y x^-1 y x>
    x, y = Word.gen(0), Word.gen(1)
    lhs = y * x * y.inverse() * x * y
    rhs = x * y * x.inverse() * y * x
    return GroupPresentation(2, (lhs * rhs.inverse(),))


@pytest.fixture
def z2():
    return pres(2, [1, 2, -1, -2])


@pytest.fixture
def modular():
    # Z/2 * Z/3, the group of the six-cuspidal sextic on a conic
    return pres(2, [1, 1], [2, 2, 2])


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
