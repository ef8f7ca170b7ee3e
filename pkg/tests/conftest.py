import pytest

from orbifano.basket import Basket

PAPER_BASKET = "1/2,2/5,1/3,2/11"
X66_WEIGHTS = (1, 5, 6, 22, 33)

_acceptance_lines = []


@pytest.fixture
def paper_basket():
    return Basket.parse(PAPER_BASKET)


@pytest.fixture
def acceptance_log():
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
