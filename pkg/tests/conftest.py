"""Shared pytest hooks: print one PASS/FAIL line per acceptance check."""

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance_outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance_outcomes.items()):
        label = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label} {name}")
