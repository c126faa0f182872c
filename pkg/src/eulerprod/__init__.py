"""Stepped factorial products, their half-index interpolation, Wallis-type
products and the Euler-Maclaurin constants, each checked by two routes."""

from ._kernels import BACKEND
from .errors import (
    ConvergenceError,
    DomainError,
    IntegrityError,
    ProductRangeError,
    ValidationError,
)
from .params import ProductKind, ProductParams

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "DomainError",
    "IntegrityError",
    "ProductKind",
    "ProductParams",
    "ProductRangeError",
    "ValidationError",
]


def _ckernels_available() -> bool:
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True
