"""The ten acceptance criteria, one test each, printing a PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

from twocrossed.suites import SUITES

CRITERIA = [
    (1, "axioms", 10.0),
    (2, "pathspace", 60.0),
    (3, "oracles", None),
    (4, "omega", None),
    (5, "groupoid", 300.0),
    (6, "counterexample", None),
    (7, "bijection", None),
    (8, "kernel", None),
    (9, "homotopy-groups", 1.0),
    (10, "identities", None),
]


@pytest.mark.parametrize("number, key, limit", CRITERIA, ids=[key for _, key, _ in CRITERIA])
def test_acceptance_criterion(number, key, limit, capsys):
    result = SUITES[key](seed=0)
    with capsys.disabled():
        print(f"\n[{number:>2}] {result.line()}")
        for note in result.notes:
            print(f"     {note}")
    assert result.report.passed, result.report.failures[:5]
    if limit is not None:
        # criterion 9 reports its slowest single case
        assert result.seconds <= limit
    assert result.passed
