import pytest
from hypothesis import strategies as st

from a3check.exactcore import EisensteinNumber

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6) | st.integers(-1000, 1000)
eisenstein = st.builds(EisensteinNumber, rationals, rationals)


@pytest.fixture
def acceptance_record():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS.append((name, ok, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
