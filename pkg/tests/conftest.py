import pytest

from monocurve.polyengine import parse_polynomial
from monocurve.semigroup import canonicalize


@pytest.fixture
def P():
    """Parse a polynomial in x0..x{n-1} (n defaults to 3)."""
    def parse(text, n=3):
        return parse_polynomial(text, n)
    return parse


@pytest.fixture
def sg():
    return lambda *gens: canonicalize(gens)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
