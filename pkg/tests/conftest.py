import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion."""
    def record(label: str, ok: bool, detail: str):
        _ACCEPTANCE[label] = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(_ACCEPTANCE[label])
