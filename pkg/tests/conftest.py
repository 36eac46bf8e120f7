import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}"
        if not ok:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
