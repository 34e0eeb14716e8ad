import pytest

from zetadim import _pykernels
from zetadim.zeros import find_zeros

ACCEPTANCE_LINES = []

try:
    from zetadim import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def record_acceptance(number, ok, detail):
    ACCEPTANCE_LINES.append((number, ok, detail))
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LINES, key=lambda x: x[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def zeros_10k():
    return find_zeros(count=10_000)


@pytest.fixture(scope="session")
def zeros_1k(zeros_10k):
    return zeros_10k.head(1000)


@pytest.fixture(params=["python", "cython"])
def kernel_module(request):
    if request.param == "python":
        return _pykernels
    if _ckernels is None:
        pytest.skip("compiled extension not built")
    return _ckernels
