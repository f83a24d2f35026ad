"""Surfaces one PASS/FAIL line per acceptance criterion in the terminal
summary, regardless of pytest's output capture mode."""


def pytest_collection_modifyitems(items):
    for item in items:
        name = getattr(getattr(item, "function", None), "_acceptance_criterion", None)
        if name:
            item.user_properties.append(("acceptance_criterion", name))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            for key, value in getattr(report, "user_properties", []):
                if key == "acceptance_criterion":
                    lines.append(f"{'PASS' if report.passed else 'FAIL'}: {value}")
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
