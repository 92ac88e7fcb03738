"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

import time

import pytest

from pline.verify import CHECKS

pytestmark = pytest.mark.acceptance


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, capsys):
    result = CHECKS[name]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_whole_suite_runtime():
    # the full suite is meant to finish well inside two minutes
    t0 = time.perf_counter()
    for fn in CHECKS.values():
        fn()
    assert time.perf_counter() - t0 < 120
