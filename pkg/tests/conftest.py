import pytest
from hypothesis import strategies as st

from cmworkbench.calculus import full_context
from cmworkbench.jacobian import CurveParams, curve_validate
from cmworkbench.rings import FIFTH_ROOT, GAUSSIAN, SIXTH_ROOT

RINGS = [GAUSSIAN, SIXTH_ROOT, FIFTH_ROOT]
RING_IDS = ["gaussian", "sixthroot", "fifthroot"]


def elements(ring, bound=20):
    return st.lists(
        st.integers(-bound, bound), min_size=ring.degree, max_size=ring.degree
    ).map(ring.element)


def nonzero_elements(ring, bound=20):
    return elements(ring, bound).filter(lambda a: not a.is_zero())


@pytest.fixture(scope="session")
def contexts():
    return {r.kind: full_context(r) for r in RINGS}


@pytest.fixture(scope="session")
def gauss13():
    return curve_validate(CurveParams.gaussian(13))


@pytest.fixture(scope="session")
def fifth11():
    return curve_validate(CurveParams.fifth_root(11))


_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
