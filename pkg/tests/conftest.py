import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run order-4 checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.skipped):
        status = {"passed": "PASS", "failed": "FAIL"}.get(report.outcome, "SKIP")
        _CRITERIA.append((marker.args[0], item.name, status, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, status, duration in sorted(_CRITERIA, key=lambda c: (c[0], c[1])):
        terminalreporter.write_line(f"{status}  criterion {number:>2}  {name}  ({duration:.2f}s)")
