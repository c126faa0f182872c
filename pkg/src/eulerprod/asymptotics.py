"""Euler-Maclaurin expansion of the log products and the constants A, B, C.

For the Gamma form with ``y = a - b + b x`` (the last factor),

    log Gamma:x ~ log A + (a/b - 1/2 + x) log y - x
                  + sum_j (-1)**(j+1) c_j / ((2j-1) 2j (2j+1)) (b/y)**(2j-1)

where ``c_j = 1/2, 1/6, 1/6, 3/10, 5/6, ...`` (see ``bernoulli``).  The Delta
and Theta forms use ``b -> 2b`` and additionally ``a -> a+b``; their
constants are ``B`` and ``C``.  The series is asymptotic, not convergent,
so the order is capped at ``MAX_ORDER``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Callable

from .bernoulli import euler_coefficient, stirling_coefficient
from .errors import ConvergenceError, DomainError, IntegrityError, ValidationError
from .interpolation import half_index_delta
from .params import ProductKind, ProductParams, check_index
from .products import log_product
from .quadrature import lgamma_oracle

MAX_ORDER = 8
DEFAULT_ORDER = 4
DEFAULT_XREF = 40
TAIL_TOL = 1e-13
STABILITY_TOL = 1e-10
RELATION_RTOL = 1e-8
AGREEMENT_RTOL = 1e-9

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

CONSTANT_NAMES = {ProductKind.GAMMA: "A", ProductKind.DELTA: "B", ProductKind.THETA: "C"}


class Provenance(str, enum.Enum):
    LIMIT_FIT = "limit_fit"
    CLOSED_FORM = "closed_form"


def _check_order(K: int) -> int:
    if isinstance(K, bool) or not isinstance(K, int) or not 0 <= K <= MAX_ORDER:
        raise ValidationError(f"order K must be an integer in 0..{MAX_ORDER}, got {K!r}")
    return K


def _series_coefficients(K: int) -> list[float]:
    # signed c_j / ((2j-1) 2j (2j+1)), converted to float only here
    return [
        float((-1) ** (j + 1) * euler_coefficient(j) / ((2 * j - 1) * (2 * j) * (2 * j + 1)))
        for j in range(1, K + 1)
    ]


def em_log_gamma_form(params: ProductParams, x: float, K: int = DEFAULT_ORDER, log_A: float = 0.0) -> float:
    """Truncated expansion of ``log Gamma:x`` with constant ``log_A``."""
    K = _check_order(K)
    a, b = params.a, params.b
    y = a + (x - 1) * b
    if not y > 0.0:
        raise DomainError(f"a - b + b x must be > 0, got {y}")
    ratio = b / y
    r2 = ratio * ratio
    correction = 0.0
    coeffs = _series_coefficients(K)
    # smallest terms first
    for j in range(K, 0, -1):
        correction += coeffs[j - 1] * ratio * r2 ** (j - 1)
    return log_A + (a / b - 0.5 + x) * math.log(y) - x + correction


def generic_em_sum(
    term: Callable[[float], float],
    antiderivative: Callable[[float], float],
    derivative: Callable[[float, int], float],
    x: float,
    K: int = DEFAULT_ORDER,
    constant: float = 0.0,
) -> float:
    """Euler-Maclaurin estimate of ``X(1) + X(2) + ... + X(x)``.

    ``S = const + int X dx + X/2 + sum_j (-1)**(j+1) c_j/(2j+1)! X^(2j-1)``;
    ``derivative(x, r)`` must return the ``r``-th derivative of ``X``.
    """
    K = _check_order(K)
    tail = 0.0
    for j in range(K, 0, -1):
        coeff = (-1) ** (j + 1) * euler_coefficient(j) / math.factorial(2 * j + 1)
        tail += float(coeff) * derivative(x, 2 * j - 1)
    return constant + antiderivative(x) + 0.5 * term(x) + tail


def log_factor_terms(params: ProductParams):
    """``(X, int X dx, X^(r))`` for ``X = log(a - b + b x)``.

    The antiderivative drops the constant ``a/b - 1``, which is absorbed
    into the constant of summation.
    """
    a, b = params.a, params.b

    def term(x):
        return math.log(a + (x - 1) * b)

    def antiderivative(x):
        y = a + (x - 1) * b
        return y / b * math.log(y) - x

    def derivative(x, r):
        y = a + (x - 1) * b
        return (-1) ** (r - 1) * math.factorial(r - 1) * (b / y) ** r

    return term, antiderivative, derivative


def _first_omitted_term(params: ProductParams, x: float, K: int) -> float:
    y = params.a + (x - 1) * params.b
    return abs(float(stirling_coefficient(K + 1))) * (params.b / y) ** (2 * K + 1)


def _log_limit_at(params, form, x, K):
    shifted = params.form(form)
    exact = log_product(form, params, x).log_value
    return exact - em_log_gamma_form(shifted, x, K, 0.0)


def log_constant_limit_fit(
    params: ProductParams, form: ProductKind, x_ref: int = DEFAULT_XREF, K: int = DEFAULT_ORDER
) -> float:
    """Log of the constant, read off the exact finite log product at ``x_ref``."""
    form = ProductKind(form)
    K = _check_order(K)
    x_ref = check_index(x_ref, "x_ref", minimum=1)
    tail = _first_omitted_term(params.form(form), x_ref, K)
    value = _log_limit_at(params, form, x_ref, K)
    if tail > TAIL_TOL:
        raise ConvergenceError(
            f"x_ref={x_ref} too small for order {K}: first omitted term {tail:.3e}",
            best_estimate=math.exp(value),
        )
    doubled = _log_limit_at(params, form, 2 * x_ref, K)
    shift = abs(math.expm1(doubled - value))
    if shift > STABILITY_TOL:
        raise ConvergenceError(
            f"constant shifts by {shift:.3e} between x_ref={x_ref} and {2 * x_ref}",
            best_estimate=math.exp(value),
        )
    return value


def constant_limit_fit(
    params: ProductParams, form: ProductKind, x_ref: int = DEFAULT_XREF, K: int = DEFAULT_ORDER
) -> float:
    """``A``, ``B`` or ``C`` for ``form``, fitted from the finite product."""
    return math.exp(log_constant_limit_fit(params, form, x_ref, K))


def log_constant_closed_form(params: ProductParams, form: ProductKind) -> float:
    # log A = 1/2 log 2pi + (1/2 - a/b) log b + 1 - a/b - lgamma(a/b)
    shifted = params.form(ProductKind(form))
    r = shifted.a / shifted.b
    return _HALF_LOG_2PI + (0.5 - r) * math.log(shifted.b) + 1.0 - r - lgamma_oracle(r)


def constant_closed_form(params: ProductParams, form: ProductKind) -> float:
    """``sqrt(2 pi) b**(1/2 - a/b) e**(1 - a/b) / Gamma(a/b)`` after the form substitution."""
    return math.exp(log_constant_closed_form(params, form))


@dataclass(frozen=True)
class AsymptoticExpansion:
    params: ProductParams
    form: ProductKind
    order: int
    log_constant: float

    def __post_init__(self):
        _check_order(self.order)

    @classmethod
    def build(cls, params, form, order=DEFAULT_ORDER, provenance=Provenance.LIMIT_FIT):
        form = ProductKind(form)
        if Provenance(provenance) is Provenance.LIMIT_FIT:
            # the constant does not depend on the truncation order
            log_c = log_constant_limit_fit(params, form)
        else:
            log_c = log_constant_closed_form(params, form)
        return cls(params, form, order, log_c)

    def __call__(self, x: float) -> float:
        return em_log_gamma_form(self.params.form(self.form), x, self.order, self.log_constant)


@dataclass
class AsymptoticConstants:
    A: float
    B: float
    C: float
    k: float
    provenance: dict = field(default_factory=dict)
    closed_form: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "A": self.A,
            "B": self.B,
            "C": self.C,
            "k": self.k,
            "provenance": dict(self.provenance),
            "closed_form": dict(self.closed_form),
            "residuals": dict(self.residuals),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def relation_residuals(A: float, B: float, C: float, k: float) -> dict[str, float]:
    """Relative residuals of the four relations between ``A, B, C, k``."""
    rt_e = math.sqrt(math.e)
    return {
        "A*sqrt(e) = B*C": A * rt_e / (B * C) - 1.0,
        "B = C*k*sqrt(e)": B / (C * k * rt_e) - 1.0,
        "C = sqrt(A/k)": C / math.sqrt(A / k) - 1.0,
        "B = sqrt(k*A*e)": B / math.sqrt(k * A * math.e) - 1.0,
    }


def verify_constant_relations(
    params: ProductParams,
    x_ref: int = DEFAULT_XREF,
    K: int = DEFAULT_ORDER,
    rtol: float = RELATION_RTOL,
    agreement_rtol: float = AGREEMENT_RTOL,
) -> AsymptoticConstants:
    """Fit ``A, B, C``, compute ``k`` by quadrature and check all relations.

    Raises
    ------
    IntegrityError
        Naming the first relation (or fit/closed-form pair) that fails.
    """
    fitted = {}
    closed = {}
    residuals = {}
    for form, name in CONSTANT_NAMES.items():
        fitted[name] = constant_limit_fit(params, form, x_ref, K)
        closed[name] = constant_closed_form(params, form)
        residuals[f"{name} limit_fit vs closed_form"] = fitted[name] / closed[name] - 1.0
    k = half_index_delta(params)
    relations = relation_residuals(fitted["A"], fitted["B"], fitted["C"], k)
    residuals.update(relations)
    result = AsymptoticConstants(
        A=fitted["A"],
        B=fitted["B"],
        C=fitted["C"],
        k=k,
        provenance={name: Provenance.LIMIT_FIT.value for name in fitted},
        closed_form=closed,
        residuals=residuals,
    )
    for name, residual in residuals.items():
        limit = rtol if name in relations else agreement_rtol
        if not abs(residual) <= limit:
            raise IntegrityError(
                f"relation {name!r} violated: residual {residual:.3e} > {limit:.0e}",
                relation=name,
                residual=residual,
            )
    return result


def exp_half_limit(i: int) -> float:
    """``(1 + 1/(2i))**i``, increasing towards ``sqrt(e)``."""
    i = check_index(i, "i", minimum=1)
    return math.exp(i * math.log1p(0.5 / i))


def truncation_errors(params: ProductParams, x: int, orders=range(MAX_ORDER + 1)) -> dict[int, float]:
    """``|expansion(K) - log Gamma:x|`` per order, closed-form constant."""
    log_a = log_constant_closed_form(params, ProductKind.GAMMA)
    exact = log_product(ProductKind.GAMMA, params, x).log_value
    return {K: abs(em_log_gamma_form(params, x, K, log_a) - exact) for K in orders}
