import re

_CRITERION_RE = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion, printed after any run
    that exercised the acceptance module."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _CRITERION_RE.search(report.location[2])
            if m:
                number = int(m.group(1))
                label = m.group(2).replace("_", " ")
                verdict = "PASS" if outcome == "passed" else "FAIL"
                lines[number] = f"criterion {number} ({label}): {verdict}"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
