import pytest

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    passed = _criteria.get(num, (title, True))[1]
    if report.when == "call" or report.failed:
        passed = passed and report.passed
        _criteria[num] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, passed = _criteria[num]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {num:2d}: {title}")
