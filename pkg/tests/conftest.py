import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import _acceptance_log  # noqa: E402

SUITE_BUDGET_SECONDS = 60.0


def pytest_sessionstart(session):
    _acceptance_log.SESSION["start"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _acceptance_log.SESSION["start"]
    _acceptance_log.SESSION["elapsed"] = elapsed
    if 10 in _acceptance_log.RESULTS and elapsed >= SUITE_BUDGET_SECONDS:
        ok, detail = _acceptance_log.RESULTS[10]
        _acceptance_log.RESULTS[10] = (False, f"{detail}; session took {elapsed:.1f}s, budget {SUITE_BUDGET_SECONDS:.0f}s")
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    elapsed = _acceptance_log.SESSION.get("elapsed")
    for line in _acceptance_log.lines(elapsed):
        terminalreporter.write_line(line)
