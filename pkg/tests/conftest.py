import pytest

# (criterion number, description, passed) filled in by test_acceptance.py
ACCEPTANCE_RESULTS = []


@pytest.fixture
def verdict():
    def record(number, description, ok):
        ACCEPTANCE_RESULTS.append((number, description, bool(ok)))
        assert ok, f"criterion {number} failed: {description}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} [{number}] {description}")
