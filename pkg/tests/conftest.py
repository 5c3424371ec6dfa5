import pytest

from siginertia.core import SignedGraph

_ACCEPTANCE: list[tuple[str, str]] = []


def record_acceptance(name: str, passed: bool) -> None:
    _ACCEPTANCE.append(("PASS" if passed else "FAIL", name))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, name in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {name}")


@pytest.fixture
def bowtie():
    # two all-positive triangles sharing vertex 0
    return SignedGraph.unsigned(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@pytest.fixture
def star3():
    return SignedGraph.unsigned(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return SignedGraph.unsigned(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
