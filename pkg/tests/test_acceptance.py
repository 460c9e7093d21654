"""One PASS/FAIL line per acceptance criterion, echoed in the run summary."""

import pytest

from conftest import ACCEPTANCE_LINES
from tconvex.checks import CRITERIA, run_check


@pytest.mark.parametrize("name", [name for name, _ in CRITERIA])
def test_criterion(name):
    result = run_check(name)
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.detail
