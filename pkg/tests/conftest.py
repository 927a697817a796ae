import pytest
from hypothesis import strategies as st

from linpique.permutation import Permutation


@st.composite
def permutations_of(draw, degree):
    return Permutation(tuple(draw(st.permutations(range(degree)))))


@pytest.fixture
def z16_top_class():
    from linpique.pique import LinearPique

    return [LinearPique(16, r, l) for r, l in ((5, 3), (5, 11), (13, 3), (13, 11))]


_criteria: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for the acceptance summary."""

    def record(number: int, title: str, passed: bool):
        _criteria[number] = (passed, title)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, title = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}")
