import pytest

from zzpers.zigzag import ZigzagModule

# criterion number -> (description, passed)
ACCEPTANCE: dict = {}


def caution1_module(p=2):
    return ZigzagModule.from_lists(p, "gf", [1, 2, 1], [[[1, 0]], [[0, 1]]])


def caution2_module(n, p=2):
    """(gf)^n with F <-pi1- F^2 -pi2-> F <- ... ; length 2n+1."""
    return ZigzagModule.from_lists(p, "gf" * n, [1, 2] * n + [1], [[[1, 0]], [[0, 1]]] * n)


@pytest.fixture
def caution1():
    return caution1_module()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {desc}")
