import re
from collections import defaultdict

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results: dict[int, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        outcomes = _results[k]
        ok = sum(o == "passed" for o in outcomes)
        status = "PASS" if ok == len(outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status} ({ok}/{len(outcomes)} checks)")
