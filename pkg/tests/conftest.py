"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_LINES: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        _LINES[key] = f"{status}  {key}  {title}"


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_LINES, key=lambda k: int(k[2:])):
        terminalreporter.write_line(_LINES[key])
