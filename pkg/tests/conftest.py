"""Shared pytest plumbing.

The acceptance tests register one summary line per criterion; the terminal
summary prints the whole ledger so every run shows each pass/fail verdict
even when stdout capture is on.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
