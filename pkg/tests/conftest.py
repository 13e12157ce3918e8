import pytest

_criteria: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria, summarized one line each")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker("acceptance") is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _criteria.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _criteria:
        terminalreporter.write_line(f"{status}  {doc}")
