from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from _verdicts import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[k])
