def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance scoreboard after the run, one line per criterion."""
    try:
        from test_acceptance import CRITERIA_RESULTS
    except ImportError:
        return
    if not CRITERIA_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA_RESULTS):
        ok, note = CRITERIA_RESULTS[n]
        tail = f" ({note})" if note else ""
        terminalreporter.write_line(
            f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}{tail}"
        )
