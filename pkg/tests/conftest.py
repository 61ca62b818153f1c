import time

_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    elapsed = time.perf_counter() - _START
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.format_line(n))
    terminalreporter.write_line(f"suite wall-clock: {elapsed:.1f}s ({'PASS' if elapsed < 60 else 'FAIL'} < 60s)")
