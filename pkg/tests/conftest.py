import re

_CRITERIA: dict[int, tuple[str, bool]] = {}
_NAME = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m or not (report.when == "call" or report.failed):
        return
    n, label = int(m.group(1)), m.group(2).replace("_", " ")
    ok = report.passed and _CRITERIA.get(n, ("", True))[1]
    _CRITERIA[n] = (label, ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        label, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {label}")
