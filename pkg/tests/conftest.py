import pytest
from hypothesis import settings, strategies as st

from cliquecover import CliqueCollection, build_gamma_partition, load_collection

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")

FIG1 = "1 2 3 5 6\n1 2 4 7 8\n1 2 3 4 9\n"

_acceptance_lines: list[str] = []


def record_criterion(number: int, title: str, passed: bool) -> None:
    _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def fig1() -> CliqueCollection:
    return load_collection(FIG1, names=["A", "B", "C"])


@pytest.fixture
def fig1_p(fig1):
    return build_gamma_partition(fig1)


@st.composite
def collections(draw, max_n: int = 10, max_m: int = 4) -> CliqueCollection:
    pool = draw(st.integers(1, max_n))
    cliques = draw(
        st.lists(
            st.sets(st.integers(1, pool), min_size=1, max_size=pool),
            min_size=1,
            max_size=max_m,
        )
    )
    return CliqueCollection.from_cliques(sorted(c) for c in cliques)
