import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ODDTHICK_DEEP") == "1":
        return
    skip = pytest.mark.skip(reason="deep tier: set ODDTHICK_DEEP=1")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail summary line per acceptance criterion."""

    def record(number, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
