import pytest

from qweyl import zpoly
from qweyl.report import CheckReport
from qweyl.verify import SUITES, run_suite


def test_zpoly_basics():
    assert zpoly.from_roots([0, 1, 1, 2]) == (0, -2, 5, -4, 1)
    assert zpoly.rising(3) == (0, 2, 3, 1)
    assert zpoly.falling(3) == (0, 2, -3, 1)
    assert zpoly.evaluate((0, -2, 5, -4, 1), 3) == 12
    assert zpoly.sub((1, 2), (1, 2)) == ()
    assert zpoly.mul((), (1,)) == ()
    assert zpoly.to_str((0, -2, 5, -4, 1)) == "z^4 - 4*z^3 + 5*z^2 - 2*z"
    assert zpoly.to_str(()) == "0"


@pytest.mark.parametrize("n", range(0, 7))
def test_rising_and_falling_evaluate(n):
    from math import factorial

    assert zpoly.evaluate(zpoly.rising(n), 1) == factorial(n)
    assert zpoly.evaluate(zpoly.falling(n), n) == factorial(n)


def test_report():
    rep = CheckReport("demo")
    assert rep.record("a", True) is True
    assert rep.passed
    rep.record("b", False, "why")
    assert not rep.passed and [i.label for i in rep.failures] == ["b"]
    assert rep.lines() == ["PASS demo a", "FAIL demo b  (why)"]
    assert rep.summary() == "FAIL demo: 1/2 instances"
    other = CheckReport("x")
    other.record("c", True)
    rep.merge(other)
    assert len(rep.instances) == 3


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_runs_small(name):
    kwargs = {"cases": 400} if name == "properties" else {}
    rep = run_suite(name, 3, **kwargs)
    assert rep.instances and rep.passed, rep.failures[:5]


def test_properties_suite_is_seeded():
    a = run_suite("properties", cases=200, seed=7)
    b = run_suite("properties", cases=200, seed=7)
    assert a.lines() == b.lines()
