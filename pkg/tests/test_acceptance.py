"""Acceptance criteria: one PASS/FAIL line per criterion."""

import pytest

from qschub import selftest


@pytest.mark.parametrize("number", sorted(selftest.CRITERIA))
def test_criterion(number, capsys):
    res = selftest.run_criterion(number, "quick")
    with capsys.disabled():
        print("\n" + res.line())
    assert res.ok, res.detail


@pytest.mark.slow
@pytest.mark.parametrize("number", [5, 8])
def test_criterion_full_profile(number, capsys):
    res = selftest.run_criterion(number, "full")
    with capsys.disabled():
        print("\n" + res.line())
    assert res.ok, res.detail
