import pytest

from hypermcg.oracle import oracle_for

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def oracles():
    return {g: oracle_for(g) for g in range(2, 6)}


@pytest.fixture
def record():
    """Record a one-line verdict for the acceptance summary."""
    def _record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
