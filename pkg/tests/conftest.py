import random

import pytest
from hypothesis import settings

from rrgb import Integers, IntegersMod, PolynomialRing, Rationals

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _acceptance.append((number, title, call.excinfo is None, item.nodeid))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    verdicts = {}
    for number, title, ok, _ in _acceptance:
        entry = verdicts.setdefault(number, [title, 0, 0])
        entry[1] += 1
        entry[2] += ok
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts, key=int):
        title, total, passed = verdicts[number]
        status = "PASS" if passed == total else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({passed}/{total} checks)")


@pytest.fixture
def rng():
    return random.Random(20151)


@pytest.fixture(scope="session")
def Z():
    return Integers()


@pytest.fixture(scope="session")
def Q():
    return Rationals()


@pytest.fixture(scope="session")
def Qxy():
    return PolynomialRing(Rationals(), ("x", "y"), "lex")


def zmod(n):
    return IntegersMod(n)
