"""Endpoint-singular Beta-type integrals and the log-gamma oracle.

Every integral here has the form

    I(p, m, n) = int_0^1 x**(p-1) (1 - x**n)**(m/n - 1) dx,

which ``t = x**n`` turns into ``B(p/n, m/n) / n``.  Two independent routes
evaluate the unit Beta integral after that substitution:

* ``CLOSED_FORM``: ``exp(lgamma(u) + lgamma(v) - lgamma(u+v))``;
* ``TRANSFORMED``: tanh-sinh (double-exponential) quadrature with nested
  step halving.  The integrand is evaluated in log form so that neither
  endpoint is ever sampled.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import _kernels
from .errors import ConvergenceError, DomainError, ValidationError
from .params import ProductParams

DEFAULT_MAX_EVALUATIONS = 2**13
DEFAULT_RTOL = 1e-12

# Lanczos approximation, g = 671/128, 14 terms; ~2e-15 relative on z > 0.
_LANCZOS_G = 5.24218750000000000
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COEF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005

# Accuracy bound used for ClosedForm error estimates.
LGAMMA_ABS_TOL = 1e-13

# log(1e-22): tail terms below this fraction of the peak are dropped.
_TAIL_LOG = 50.0
_MAX_TAU = 12.0
_H0 = 0.5


class Route(str, enum.Enum):
    TRANSFORMED = "transformed"
    CLOSED_FORM = "closed"


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    route: Route

    def __float__(self):
        return self.value

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "evaluations": self.evaluations,
            "route": self.route.value,
        }


@dataclass(frozen=True)
class GeneralBetaSpec:
    """Parameters ``p, q, m, n`` of the four-parameter product/integral pair.

    Single integrals use ``p``, ``m`` and ``n``; ``q`` names the exponent of
    the denominator integral in ratio specs.
    """

    p: float
    q: float
    m: float
    n: float

    def __post_init__(self):
        for name in ("p", "q", "m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(f"{name} must be a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.m <= 0.0:
            raise DomainError(f"m must be > 0 for an integrable singularity, got {self.m}")
        if self.p <= 0.0 or self.q <= 0.0 or self.n <= 0.0:
            raise DomainError("p, q and n must all be > 0")
        if self.m / self.n > 1.0:
            raise ValidationError(f"m/n must be <= 1, got {self.m / self.n}")

    @classmethod
    def single(cls, p: float, m: float, n: float) -> "GeneralBetaSpec":
        return cls(p, p, m, n)

    @classmethod
    def from_params(cls, params: ProductParams) -> "GeneralBetaSpec":
        """The substitution ``q=a, p=a+b, m=b, n=2b``."""
        a, b = params.a, params.b
        return cls(p=a + b, q=a, m=b, n=2.0 * b)


def lgamma_oracle(z: float) -> float:
    """Natural log of the gamma function for ``z > 0``."""
    z = float(z)
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"lgamma_oracle needs a finite z > 0, got {z!r}")
    tmp = z + _LANCZOS_G
    tmp = (z + 0.5) * math.log(tmp) - tmp
    ser = _LANCZOS_C0
    y = z
    for c in _LANCZOS_COEF:
        y += 1.0
        ser += c / y
    return tmp + math.log(_SQRT_2PI * ser / z)


def _closed_unit_beta(u: float, v: float) -> QuadratureResult:
    lu, lv, luv = lgamma_oracle(u), lgamma_oracle(v), lgamma_oracle(u + v)
    log_b = lu + lv - luv
    value = math.exp(log_b)
    # each lgamma carries at most LGAMMA_ABS_TOL * max(1, |lgamma|) error
    bound = LGAMMA_ABS_TOL * sum(max(1.0, abs(x)) for x in (lu, lv, luv))
    return QuadratureResult(value, value * math.expm1(bound), 3, Route.CLOSED_FORM)


def _tau_max(u: float, v: float) -> float:
    # terms decay like exp(-pi * min(u, v) * sinh(tau)) in both tails
    return min(_MAX_TAU, math.asinh((_TAIL_LOG + _MAX_TAU) / (math.pi * min(u, v))))


def _de_unit_beta(u: float, v: float, max_evaluations: int, rtol: float) -> QuadratureResult:
    kmax = math.ceil(_tau_max(u, v) / _H0)
    h = _H0
    raw, evaluations = _kernels.de_beta_level(u, v, h, kmax, False)
    estimate = h * raw
    previous = None
    level_diff = math.inf
    while True:
        if previous is not None:
            level_diff = abs(estimate - previous)
            if level_diff <= rtol * abs(estimate):
                break
        # the next level evaluates kmax new (odd) nodes
        if evaluations + 2 * kmax > max_evaluations:
            raise ConvergenceError(
                f"tanh-sinh quadrature for B({u}, {v}) did not reach rtol={rtol} "
                f"within {max_evaluations} evaluations",
                best_estimate=QuadratureResult(
                    estimate, level_diff, evaluations, Route.TRANSFORMED
                ),
            )
        kmax *= 2
        h *= 0.5
        new_raw, count = _kernels.de_beta_level(u, v, h, kmax, True)
        raw += new_raw
        evaluations += count
        previous, estimate = estimate, h * raw
    # level differences overstate the true error; floor at summation rounding
    error = max(level_diff, 8.0 * math.ulp(1.0) * abs(estimate))
    return QuadratureResult(estimate, error, evaluations, Route.TRANSFORMED)


def beta_integral(
    spec: GeneralBetaSpec,
    route: Route | str = Route.TRANSFORMED,
    *,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
    rtol: float = DEFAULT_RTOL,
) -> QuadratureResult:
    """``int_0^1 x**(p-1) (1-x**n)**(m/n-1) dx`` by the chosen route.

    Raises
    ------
    DomainError
        If ``m <= 0`` (checked when ``spec`` is built).
    ConvergenceError
        If the transformed route exhausts ``max_evaluations``; the best
        estimate is attached.
    """
    route = Route(route)
    u = spec.p / spec.n
    v = spec.m / spec.n
    if route is Route.CLOSED_FORM:
        unit = _closed_unit_beta(u, v)
    else:
        unit = _de_unit_beta(u, v, max_evaluations, rtol)
    scale = 1.0 / spec.n
    return QuadratureResult(
        unit.value * scale, unit.error_estimate * scale, unit.evaluations, route
    )


def _root_integral(params: ProductParams, shift: float, route) -> QuadratureResult:
    # int_0^1 x**(a+shift-1) / sqrt(1 - x**(2b)) dx
    b = params.b
    return beta_integral(GeneralBetaSpec.single(params.a + shift, b, 2.0 * b), route)


def P_integral(params: ProductParams, route: Route | str = Route.TRANSFORMED) -> QuadratureResult:
    """``int_0^1 x**(a+b-1) / sqrt(1 - x**(2b)) dx``."""
    return _root_integral(params, params.b, route)


def Q_integral(params: ProductParams, route: Route | str = Route.TRANSFORMED) -> QuadratureResult:
    """``int_0^1 x**(a-1) / sqrt(1 - x**(2b)) dx``."""
    return _root_integral(params, 0.0, route)


def reduction_residual(params: ProductParams, route: Route | str = Route.TRANSFORMED) -> float:
    """``int x**(a+2b-1)/sqrt(1-x**(2b)) - a/(a+b) * Q``; zero up to quadrature error."""
    raised = _root_integral(params, 2.0 * params.b, route).value
    q = Q_integral(params, route).value
    return raised - params.a / (params.a + params.b) * q
