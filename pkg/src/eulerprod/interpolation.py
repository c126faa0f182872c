"""Half-index values of the stepped products.

``k = Delta:1/2 = sqrt(a P/Q)`` with ``P``, ``Q`` the square-root integrals;
``Theta:1/2`` and ``Gamma:1/2`` follow from the same construction with
``a -> a+b`` and ``b -> b/2`` respectively.

The ``GAMMA_ORACLE`` route uses the modern identity
``Delta:n = (2b)**n Gamma(a/(2b) + n) / Gamma(a/(2b))`` evaluated at
``n = 1/2``.  It is a cross-check only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import IntegrityError
from .params import ProductParams, check_index
from .products import theta_product
from .quadrature import (
    GeneralBetaSpec,
    P_integral,
    Q_integral,
    Route,
    beta_integral,
    lgamma_oracle,
)

AGREEMENT_RTOL = 1e-10


class HalfRoute(str, enum.Enum):
    QUADRATURE_RATIO = "quad"
    GAMMA_ORACLE = "oracle"


@dataclass(frozen=True)
class HalfIndexValue:
    k: float
    theta_half: float
    gamma_half: float
    route: HalfRoute

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "theta_half": self.theta_half,
            "gamma_half": self.gamma_half,
            "route": self.route.value,
        }


def _oracle_half(a: float, step: float) -> float:
    # step**(1/2) * Gamma(a/step + 1/2) / Gamma(a/step)
    x = a / step
    return math.sqrt(step) * math.exp(lgamma_oracle(x + 0.5) - lgamma_oracle(x))


def _check(name: str, value: float, reference: float, rtol: float) -> None:
    residual = abs(value - reference) / abs(reference)
    if not residual <= rtol:
        raise IntegrityError(
            f"{name}: {value!r} vs {reference!r} (relative residual {residual:.3e})",
            relation=name,
            residual=residual,
        )


def half_index_delta(
    params: ProductParams, route: HalfRoute | str = HalfRoute.QUADRATURE_RATIO
) -> float:
    """``k = Delta:1/2``."""
    route = HalfRoute(route)
    if route is HalfRoute.GAMMA_ORACLE:
        return _oracle_half(params.a, 2.0 * params.b)
    p = P_integral(params, Route.TRANSFORMED).value
    q = Q_integral(params, Route.TRANSFORMED).value
    return math.sqrt(params.a * p / q)


def half_index_theta(params: ProductParams, rtol: float = AGREEMENT_RTOL) -> float:
    """``Theta:1/2`` from its own integral ratio; checked against ``a / k``."""
    a, b = params.a, params.b
    raised = beta_integral(GeneralBetaSpec.single(a + 2.0 * b, b, 2.0 * b)).value
    p = P_integral(params).value
    direct = math.sqrt((a + b) * raised / p)
    _check("theta_half = a/k", direct, a / half_index_delta(params), rtol)
    return direct


def half_index_gamma(params: ProductParams, rtol: float = AGREEMENT_RTOL) -> float:
    """``Gamma:1/2``: the Delta construction with ``b/2`` in place of ``b``.

    Checked against ``sqrt(b) Gamma(a/b + 1/2) / Gamma(a/b)``.
    """
    a, b = params.a, params.b
    half = 0.5 * b
    num = beta_integral(GeneralBetaSpec.single(a + half, half, b)).value
    den = beta_integral(GeneralBetaSpec.single(a, half, b)).value
    value = math.sqrt(a * num / den)
    _check("gamma_half oracle", value, _oracle_half(a, b), rtol)
    return value


def half_index_values(
    params: ProductParams, route: HalfRoute | str = HalfRoute.QUADRATURE_RATIO
) -> HalfIndexValue:
    route = HalfRoute(route)
    k = half_index_delta(params, route)
    if route is HalfRoute.GAMMA_ORACLE:
        theta = _oracle_half(params.a + params.b, 2.0 * params.b)
        gamma = _oracle_half(params.a, params.b)
    else:
        theta = half_index_theta(params)
        gamma = half_index_gamma(params)
    return HalfIndexValue(k, theta, gamma, route)


def shifted_half_sequence(params: ProductParams, n: int) -> float:
    """``Delta:(n + 1/2) = k (a+b)(a+3b)...(a+(2n-1)b)``."""
    n = check_index(n)
    return half_index_delta(params) * theta_product(params, n)
