import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n, name = int(m.group(1)), m.group(2)
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed or n not in _outcomes:
        _outcomes[n] = ("FAIL" if failed else "PASS", name)
    elif report.when == "call":
        _outcomes[n] = ("PASS", name)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        verdict, name = _outcomes[n]
        terminalreporter.write_line(f"ACCEPTANCE {n:2d} {name}: {verdict}")
