from fractions import Fraction

import pytest

from parrondo import make_game_spec, parse_pattern

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def spec_3_third():
    return make_game_spec(3, Fraction(1, 3))


@pytest.fixture
def pat():
    return parse_pattern


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
