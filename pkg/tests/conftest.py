import json
from pathlib import Path

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def derived():
    return json.loads((Path(__file__).with_name("data") / "derived.json").read_text())


@pytest.fixture
def record_acceptance():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
