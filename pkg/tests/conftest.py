import itertools

import pytest

from eulerprod import _ckernels_available
from eulerprod import _pykernels
from eulerprod.params import ProductParams

GRID = list(itertools.product([0.5, 1.0, 1.5, 2.0, 3.7], [0.5, 1.0, 2.0]))
QUAD_GRID = list(itertools.product([0.5, 1.0, 1.5, 2.0, 3.7], [0.5, 1.0, 2.0, 5.0]))


def _backends():
    out = [pytest.param(_pykernels, id="python")]
    if _ckernels_available():
        from eulerprod import _ckernels

        out.append(pytest.param(_ckernels, id="cython"))
    return out


@pytest.fixture(params=_backends())
def kernels(request):
    return request.param


@pytest.fixture(params=GRID, ids=lambda ab: f"a={ab[0]},b={ab[1]}")
def grid_params(request):
    return ProductParams(*request.param)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
