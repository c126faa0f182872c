"""Exact Bernoulli numbers and the coefficient sequence 1/2, 1/6, 1/6, 3/10, 5/6, ...

Values are :class:`fractions.Fraction` (lowest terms, positive denominator).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ValidationError

MAX_K = 60


@dataclass(frozen=True)
class BernoulliTable:
    """``B_0 .. B_{2K}`` with the convention ``B_1 = -1/2``."""

    max_index: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.max_index:
            raise ValidationError(f"B_{n} outside table 0..{self.max_index}")
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def recurrence_residual(self, n: int) -> Fraction:
        """``sum_{k<=n} C(n+1, k) B_k``; exactly zero for ``n >= 1``."""
        return sum((comb(n + 1, k) * self.values[k] for k in range(n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def bernoulli_numbers(K: int) -> BernoulliTable:
    """Table of ``B_0 .. B_{2K}`` from ``sum_{k=0}^{n} C(n+1,k) B_k = 0``."""
    if isinstance(K, bool) or not isinstance(K, int) or not 1 <= K <= MAX_K:
        raise ValidationError(f"K must be an integer in 1..{MAX_K}, got {K!r}")
    top = 2 * K
    values = [Fraction(1)]
    for n in range(1, top + 1):
        if n > 1 and n % 2 == 1:
            values.append(Fraction(0))
            continue
        acc = sum((comb(n + 1, k) * values[k] for k in range(n)), Fraction(0))
        values.append(-acc / (n + 1))
    return BernoulliTable(top, tuple(values))


def euler_coefficient(k: int, table: BernoulliTable | None = None) -> Fraction:
    """``(2k+1) |B_{2k}|``: 1/2, 1/6, 1/6, 3/10, 5/6 for k = 1..5.

    In the Euler-Maclaurin sum, the term in the ``(2k-1)``-th derivative is
    ``(-1)**(k+1) * euler_coefficient(k) / (2k+1)!``.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValidationError(f"k must be a positive integer, got {k!r}")
    if table is None:
        if k > MAX_K:
            raise ValidationError(f"k={k} exceeds the table limit {MAX_K}")
        table = bernoulli_numbers(max(k, 8))
    elif 2 * k > table.max_index:
        raise ValidationError(f"table holds B_0..B_{table.max_index}; need B_{2 * k}")
    return (2 * k + 1) * abs(table[2 * k])


def stirling_coefficient(k: int) -> Fraction:
    """``B_{2k} / ((2k-1) 2k)``, the coefficient of ``z**(1-2k)`` in log-gamma."""
    table = bernoulli_numbers(max(k, 8))
    return table[2 * k] / ((2 * k - 1) * (2 * k))
