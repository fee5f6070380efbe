import re

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_outcomes[report.nodeid] = report.outcome


def _criterion_sort_key(nodeid):
    m = re.search(r"criterion_(\d+)", nodeid)
    return (int(m.group(1)) if m else 99, nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes, key=_criterion_sort_key):
        label = nodeid.split("::")[-1]
        outcome = _acceptance_outcomes[nodeid].upper()
        terminalreporter.write_line(f"{label}: {outcome}")
