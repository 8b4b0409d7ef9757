"""Runs the ten acceptance criteria at full level, one pass/fail line each."""

import pytest

from lforge import acceptance

from conftest import ACCEPTANCE_LINES

NUMBERS = [n for n, _, _ in acceptance.CRITERIA]


@pytest.fixture(scope="module")
def results():
    out = {r.number: r for r in acceptance.run("full")}
    for n in NUMBERS:
        ACCEPTANCE_LINES.append(out[n].line())
    return out


@pytest.mark.parametrize("number", NUMBERS)
def test_criterion(results, number):
    r = results[number]
    assert r.passed, f"{r.detail} (witness: {r.witness!r})"
