import math
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerprod import _ckernels_available, _pykernels

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


@given(st.integers(min_value=0, max_value=10**7), finite, finite)
@settings(max_examples=300)
def test_fma_emulation_is_correctly_rounded(j, b, a):
    exact = Fraction(j) * Fraction(b) + Fraction(a)
    assert _pykernels.fma(float(j), b, a) == float(exact)


def test_stepped_kernels_against_integer_oracle(kernels):
    # 1*3*5*7*9 and 2*4*6*8*10
    assert kernels.stepped_product(1.0, 1.0, 2, 0, 5) == 945.0
    assert kernels.stepped_product(1.0, 1.0, 2, 1, 5) == 3840.0
    assert kernels.stepped_log_sum(1.0, 1.0, 1, 0, 10) == pytest.approx(math.log(3628800), rel=1e-15)


def test_stepped_product_reports_overflow_as_inf(kernels):
    assert kernels.stepped_product(1.0, 1.0, 1, 0, 400) == math.inf


def test_ratio_product_switches_to_log_space(kernels):
    direct = kernels.ratio_product(1.0, 3.0, 2.0, 2.0, 2.0, 5000, 10**9)
    logged = kernels.ratio_product(1.0, 3.0, 2.0, 2.0, 2.0, 5000, 0)
    assert logged == pytest.approx(direct, rel=1e-13)


def test_de_level_integrates_arcsine_density(kernels):
    # B(1/2, 1/2) = pi
    total, count = kernels.de_beta_level(0.5, 0.5, 1 / 64, 64 * 8, False)
    assert total / 64 == pytest.approx(math.pi, rel=1e-14)
    assert count == 2 * 64 * 8 + 1


@pytest.mark.skipif(not _ckernels_available(), reason="compiled backend not built")
@pytest.mark.parametrize(
    "name, args",
    [
        ("stepped_product", (3.7, 0.3, 2, 1, 100)),
        ("stepped_log_sum", (3.7, 0.3, 2, 1, 5000)),
        ("stepped_log_sum", (0.1, 7.25, 1, 0, 777)),
        ("ratio_product", (1.0, 3.0, 2.0, 2.0, 2.0, 3000, 10**4)),
        ("ratio_product", (3.7, 4.7, 4.2, 4.2, 1.0, 20000, 10**4)),
        ("alternating_ratio_product", (2.0, 3.0, 2.0, 4001, 10**4)),
        ("alternating_ratio_product", (0.5, 1.0, 1.0, 40001, 10**4)),
        ("de_beta_level", (0.05, 0.5, 0.125, 60, False)),
        ("de_beta_level", (1.85, 0.5, 0.0625, 97, True)),
    ],
)
def test_backends_agree_bitwise(name, args):
    from eulerprod import _ckernels

    assert getattr(_ckernels, name)(*args) == getattr(_pykernels, name)(*args)


def test_pure_python_fallback_selected_by_environment():
    env = dict(os.environ, EULERPROD_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import eulerprod; print(eulerprod.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
