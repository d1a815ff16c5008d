import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion."""
    def _record(name, ok, detail=""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{name:<4} {'PASS' if ok else 'FAIL'}  {detail}")
