import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# One-line verdicts recorded by the acceptance suite, echoed after the
# normal pytest summary so they are visible without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
