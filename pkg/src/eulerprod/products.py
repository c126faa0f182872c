"""Finite stepped products and their exact splitting identity.

Factor ``j`` of each family is ``a + (stride*j + offset)*b`` evaluated with a
single fused multiply-add, so the Gamma factors at ``2n`` are bitwise the
union of the Delta and Theta factors at ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import ProductRangeError
from .params import ProductKind, ProductParams, check_index


@dataclass(frozen=True)
class LogProductValue:
    """Natural log of a positive product (the sign is always +1 here)."""

    log_value: float
    sign: int = 1

    def __float__(self):
        return self.log_value

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def factors(kind: ProductKind, params: ProductParams, n: int) -> list[float]:
    """The ``n`` factors of the product, in index order."""
    kind = ProductKind(kind)
    n = check_index(n)
    a, b = params.a, params.b
    stride, offset = kind.stride, kind.offset
    # a one-factor product is exactly that factor's fma
    return [_kernels.stepped_product(a, b, 1, stride * j + offset, 1) for j in range(n)]


def _direct(kind: ProductKind, params: ProductParams, n: int) -> float:
    n = check_index(n)
    value = _kernels.stepped_product(params.a, params.b, kind.stride, kind.offset, n)
    if math.isinf(value):
        raise ProductRangeError(
            f"{kind.value} product with n={n} overflows binary64; use log_product"
        )
    return value


def gamma_product(params: ProductParams, n: int) -> float:
    """``a (a+b) (a+2b) ... (a+(n-1)b)``; 1 for ``n = 0``."""
    return _direct(ProductKind.GAMMA, params, n)


def delta_product(params: ProductParams, n: int) -> float:
    """``a (a+2b) (a+4b) ... (a+(2n-2)b)``."""
    return _direct(ProductKind.DELTA, params, n)


def theta_product(params: ProductParams, n: int) -> float:
    """``(a+b) (a+3b) ... (a+(2n-1)b)``."""
    return _direct(ProductKind.THETA, params, n)


def product(kind: ProductKind, params: ProductParams, n: int) -> float:
    return _direct(ProductKind(kind), params, n)


def log_product(kind: ProductKind, params: ProductParams, n: int) -> LogProductValue:
    """Compensated sum of the logs of the ``n`` factors. Never overflows."""
    kind = ProductKind(kind)
    n = check_index(n)
    return LogProductValue(
        _kernels.stepped_log_sum(params.a, params.b, kind.stride, kind.offset, n)
    )


def splitting_identity_residual(params: ProductParams, n: int) -> float:
    """``log Gamma:2n - log Delta:n - log Theta:n``, zero up to rounding."""
    n = check_index(n)
    check_index(2 * n)
    g = log_product(ProductKind.GAMMA, params, 2 * n).log_value
    d = log_product(ProductKind.DELTA, params, n).log_value
    t = log_product(ProductKind.THETA, params, n).log_value
    return g - d - t


def splitting_tolerance(params: ProductParams, n: int, rel: float = 1e-12) -> float:
    g = log_product(ProductKind.GAMMA, params, 2 * n).log_value
    return rel * (1.0 + abs(g))
