from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
