import pytest

_CRITERIA: dict[int, str] = {}


class Criterion:
    """Records one acceptance verdict; the summary prints every recorded line."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title

    def verdict(self, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {self.number}: {self.title}"
        _CRITERIA[self.number] = line + (f" ({detail})" if detail else "")
        assert ok, _CRITERIA[self.number]


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[k])
