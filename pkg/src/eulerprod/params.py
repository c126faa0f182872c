"""Parameter types shared by the product families."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .errors import ValidationError

#: Largest index accepted by the O(n) product evaluators.
MAX_INDEX = 10**7


class ProductKind(str, enum.Enum):
    """The three stepped product families.

    ``GAMMA``  a (a+b) (a+2b) ...         step b, start a
    ``DELTA``  a (a+2b) (a+4b) ...        step 2b, start a
    ``THETA``  (a+b) (a+3b) (a+5b) ...    step 2b, start a+b
    """

    GAMMA = "gamma"
    DELTA = "delta"
    THETA = "theta"

    @property
    def stride(self) -> int:
        return 1 if self is ProductKind.GAMMA else 2

    @property
    def offset(self) -> int:
        return 1 if self is ProductKind.THETA else 0


@dataclass(frozen=True)
class ProductParams:
    """Start ``a`` and unit step ``b`` of the stepped products (both > 0)."""

    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(f"{name} must be a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value) or value <= 0.0:
                raise ValidationError(f"{name} must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_strings(cls, a: str, b: str) -> "ProductParams":
        """Parse decimal strings, rejecting anything that does not round-trip.

        At most 15 significant digits are accepted; such strings survive a
        binary64 round trip unchanged.
        """
        return cls(parse_decimal(a, "a"), parse_decimal(b, "b"))

    def form(self, kind: ProductKind) -> "ProductParams":
        """Parameters of the Gamma-form product equivalent to ``kind``.

        Delta is Gamma with ``2b`` in place of ``b``; Theta additionally has
        ``a + b`` in place of ``a``.
        """
        kind = ProductKind(kind)
        if kind is ProductKind.GAMMA:
            return self
        if kind is ProductKind.DELTA:
            return ProductParams(self.a, 2.0 * self.b)
        return ProductParams(self.a + self.b, 2.0 * self.b)


def parse_decimal(text: str, name: str = "value") -> float:
    try:
        dec = Decimal(text.strip())
    except (InvalidOperation, AttributeError):
        raise ValidationError(f"{name}: not a decimal number: {text!r}") from None
    if not dec.is_finite():
        raise ValidationError(f"{name}: must be finite, got {text!r}")
    digits = len(dec.normalize().as_tuple().digits)
    if digits > 15:
        raise ValidationError(
            f"{name}: {digits} significant digits exceed the 15 that round-trip"
        )
    value = float(dec)
    if Decimal(format(value, ".15g")) != dec:
        raise ValidationError(f"{name}: {text!r} does not round-trip through binary64")
    return value


def check_index(n, name: str = "n", minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        else:
            raise ValidationError(f"{name} must be an integer, got {n!r}")
    if n < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {n}")
    if n > MAX_INDEX:
        raise ValidationError(f"{name} exceeds the cap {MAX_INDEX}")
    return n
