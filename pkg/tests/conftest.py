"""Shared pytest hooks: one PASS/FAIL line per acceptance criterion."""

import pytest

_RESULTS: dict[int, tuple[str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        verdict = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
        _RESULTS[number] = (verdict, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        verdict, duration = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({duration:.2f} s)")
