import math

import pytest

from eulerprod.acceptance import DEFAULT_GRID as GRID
from eulerprod.errors import IntegrityError
from eulerprod.interpolation import (
    HalfRoute,
    half_index_delta,
    half_index_gamma,
    half_index_theta,
    half_index_values,
    shifted_half_sequence,
)
from eulerprod.params import ProductParams
from eulerprod.products import delta_product, theta_product
from eulerprod.wallis import kk_partial

ONE = ProductParams(1, 1)
TWO_ONE = ProductParams(2, 1)


def test_k_examples():
    assert half_index_delta(ONE) == pytest.approx(0.7978845608, abs=1e-10)
    assert half_index_delta(ONE) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-13)
    assert half_index_delta(TWO_ONE) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-13)


@pytest.mark.parametrize("a, b", GRID)
def test_routes_agree(a, b):
    p = ProductParams(a, b)
    quad = half_index_delta(p, HalfRoute.QUADRATURE_RATIO)
    oracle = half_index_delta(p, "oracle")
    assert quad == pytest.approx(oracle, rel=1e-12)


@pytest.mark.parametrize("a, b", GRID)
def test_delta_theta_half_product_is_a(a, b):
    p = ProductParams(a, b)
    assert half_index_delta(p) * half_index_theta(p) == pytest.approx(a, rel=1e-12)


@pytest.mark.parametrize("a, b", GRID)
def test_gamma_half_matches_oracle(a, b):
    p = ProductParams(a, b)
    values = half_index_values(p)
    oracle = half_index_values(p, HalfRoute.GAMMA_ORACLE)
    assert values.gamma_half == pytest.approx(oracle.gamma_half, rel=1e-12)
    assert values.theta_half == pytest.approx(oracle.theta_half, rel=1e-12)
    assert values.to_dict()["route"] == "quad"


def test_theta_examples():
    assert half_index_theta(ONE) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-13)
    assert half_index_theta(TWO_ONE) == pytest.approx(1.5957691216, abs=1e-10)


def test_gamma_examples():
    assert half_index_gamma(ONE) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-13)
    assert half_index_gamma(ProductParams(1, 2)) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-13)
    assert half_index_gamma(TWO_ONE) == pytest.approx(3 * math.sqrt(math.pi) / 4, rel=1e-13)


def test_gamma_half_equals_delta_half_with_half_step():
    for a, b in GRID:
        assert half_index_gamma(ProductParams(a, b)) == pytest.approx(
            half_index_delta(ProductParams(a, b / 2)), rel=1e-12
        )


def test_integrity_error_on_impossible_tolerance():
    with pytest.raises(IntegrityError) as info:
        half_index_gamma(ProductParams(3.7, 0.5), rtol=-1.0)
    assert info.value.relation == "gamma_half oracle"


def test_shifted_sequence_examples():
    assert shifted_half_sequence(ONE, 0) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-13)
    assert shifted_half_sequence(ONE, 1) == pytest.approx(2 * math.sqrt(2 / math.pi), rel=1e-13)


@pytest.mark.parametrize("a, b", GRID)
def test_shifted_sequence_ratio(a, b):
    p = ProductParams(a, b)
    for n in range(0, 30):
        ratio = shifted_half_sequence(p, n + 1) / shifted_half_sequence(p, n)
        assert ratio == pytest.approx(a + (2 * n + 1) * b, rel=1e-13)


@pytest.mark.parametrize("a, b", GRID)
def test_half_step_log_convexity(a, b):
    # Delta(n+1/2)^2 <= Delta(n) Delta(n+1)
    p = ProductParams(a, b)
    for n in range(0, 20):
        mid = shifted_half_sequence(p, n)
        assert mid * mid <= delta_product(p, n) * delta_product(p, n + 1) * (1 + 1e-13)


@pytest.mark.parametrize("a, b", GRID)
def test_kk_partial_approaches_k_squared(a, b):
    p = ProductParams(a, b)
    k = half_index_delta(p)
    assert kk_partial(p, 10**6) == pytest.approx(k * k, abs=1e-6)


def test_theta_half_times_k_uses_theta_product():
    # Delta:(n+1/2) / Theta:n = k for all n
    for n in range(10):
        assert shifted_half_sequence(TWO_ONE, n) / theta_product(TWO_ONE, n) == pytest.approx(
            half_index_delta(TWO_ONE), rel=1e-14
        )
