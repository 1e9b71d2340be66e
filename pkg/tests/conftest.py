import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[1].split("[")[0]
        ok = report.outcome == "passed"
        _CRITERIA[name] = _CRITERIA.get(name, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        n = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        status = "PASS" if _CRITERIA[name] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {n}: {label}")
