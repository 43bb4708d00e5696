import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion n")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    entry = _criteria.setdefault(n, {"title": title, "passed": 0, "failed": 0})
    entry["failed" if call.excinfo is not None else "passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "PASS" if e["failed"] == 0 else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {n}: {e['title']} ({e['passed']} passed, {e['failed']} failed)")
