import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

RESULTS = {}


@pytest.fixture
def criterion():
    """report(n, ok, detail): record and print one line for an acceptance criterion."""
    def report(n, ok, detail):
        line = "CRITERION %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail)
        RESULTS[n] = line
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
