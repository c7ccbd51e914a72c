"""One pass/fail line per acceptance criterion, repeated in the terminal summary."""

from __future__ import annotations

import pytest

from spinfold.acceptance import CRITERIA, format_row, run_criterion

RESULTS = []


@pytest.mark.parametrize("number", [n for n, *_ in CRITERIA], ids=[f"criterion-{n}" for n, *_ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    RESULTS.append(result)
    print(format_row(result))
    assert result.passed, format_row(result)


def test_topology_row_reports_two():
    result = run_criterion(5)
    assert "2.00" in result.measured
