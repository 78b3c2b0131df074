import pytest

_criterion_lines: list[str] = []


@pytest.fixture
def criterion():
    """Call as ``criterion(k, ok, detail)``; prints and records one PASS/FAIL line."""

    def record(k: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
        print(line)
        _criterion_lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_criterion_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
