import pytest

from priocode import BitVector, build_parity_check


@pytest.fixture(scope="session")
def H3():
    return build_parity_check(3)


@pytest.fixture(scope="session")
def H4():
    return build_parity_check(4)


def bv(text: str) -> BitVector:
    return BitVector.from_string(text)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
