import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion."""
    status = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call" and key == "passed":
                continue
            name = rep.nodeid.split("::")[-1]
            if "test_acceptance.py" not in rep.nodeid or not name.startswith("test_criterion_"):
                continue
            crit = name[len("test_criterion_"):].split("[")[0]
            ok = key == "passed" and status.get(crit, True)
            status[crit] = ok
    if not status:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(status):
        num, _, label = crit.partition("_")
        terminalreporter.write_line(f"{'PASS' if status[crit] else 'FAIL'}  criterion {int(num):2d}  {label}")
