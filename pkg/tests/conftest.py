"""Shared pytest wiring: the acceptance summary block.

Acceptance tests register one verdict per criterion; the hook prints
them in a dedicated section at the end of the run so the pass/fail
status of each criterion is visible even when pytest captures stdout.
"""

ACCEPTANCE = {}


def record_criterion(number: int, passed: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = ("PASS" if passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        line = f"[acceptance] criterion {n}: {status}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
