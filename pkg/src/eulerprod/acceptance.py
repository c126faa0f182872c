"""Acceptance checks, shared by ``eulerprod verify`` and the test-suite.

Each ``check_*`` function runs one criterion over a parameter grid and
returns a :class:`CheckResult`.  ``tolerance`` overrides the check's primary
floating tolerance; exactness requirements (bitwise equality, rational
equality) and the fixed convergence windows are not affected by it.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import asymptotics, bernoulli, interpolation, products, quadrature, wallis
from .params import ProductKind, ProductParams
from .quadrature import GeneralBetaSpec, Route

DEFAULT_GRID = tuple(itertools.product((0.5, 1.0, 1.5, 2.0, 3.7), (0.5, 1.0, 2.0)))

# (p, q, m, n) specs for the four-parameter product, with m/n <= 1
DUALITY_SPECS = ((1.0, 2.0, 1.0, 2.0), (1.5, 0.5, 1.0, 3.0), (2.0, 3.0, 0.5, 1.0))
DUALITY_SAMPLE_N = tuple(range(0, 101)) + (257, 1000, 4096, 9999, 10000)


@dataclass
class CheckResult:
    name: str
    passed: bool
    metric: float
    threshold: float
    elapsed_s: float
    budget_s: float
    details: dict = field(default_factory=dict)

    @property
    def within_budget(self) -> bool:
        return self.elapsed_s <= self.budget_s

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.name}: metric={self.metric:.3e} "
            f"threshold={self.threshold:.3e} time={self.elapsed_s:.3f}s/{self.budget_s:g}s"
        )


def _params(grid):
    return [ProductParams(a, b) for a, b in grid]


def _finish(name, ok, metric, threshold, start, budget, **details):
    elapsed = time.perf_counter() - start
    details["numeric_ok"] = bool(ok)
    return CheckResult(name, bool(ok) and elapsed <= budget, metric, threshold, elapsed, budget, details)


def check_splitting(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    """Gamma:2n = Delta:n Theta:n in log form, n <= 50."""
    tol = 1e-12 if tolerance is None else tolerance
    start = time.perf_counter()
    worst = 0.0
    for p in _params(grid):
        for n in range(51):
            g = products.log_product(ProductKind.GAMMA, p, 2 * n).log_value
            r = products.splitting_identity_residual(p, n)
            worst = max(worst, abs(r) / (1.0 + abs(g)))
    return _finish("1 splitting identity", worst <= tol, worst, tol, start, 1.0)


def check_wallis_case(tolerance=None) -> CheckResult:
    """a = b = 1: P = 1, Q = pi/2, k = sqrt(2/pi), 1/N convergence."""
    tol = 1e-10 if tolerance is None else tolerance
    start = time.perf_counter()
    p = ProductParams(1.0, 1.0)
    devs = {}
    for route in Route:
        devs[f"P {route.value}"] = abs(quadrature.P_integral(p, route).value - 1.0)
        devs[f"Q {route.value}"] = abs(quadrature.Q_integral(p, route).value - math.pi / 2)
    devs["k"] = abs(interpolation.half_index_delta(p) - math.sqrt(2.0 / math.pi))
    report = wallis.converge(p, [10**3, 10**4, 10**5])
    window_ok = all(
        0.01 / n <= e <= 100.0 / n for (n, _), e in zip(report.partials, report.abs_errors)
    )
    rate_ok = report.fitted_rate is not None and abs(report.fitted_rate - 1.0) <= 0.1
    worst = max(devs.values())
    ok = worst <= tol and window_ok and rate_ok
    return _finish(
        "2 Wallis case a=b=1", ok, worst, tol, start, 5.0,
        fitted_rate=report.fitted_rate, window_ok=window_ok,
        scaled_errors=[n * e for (n, _), e in zip(report.partials, report.abs_errors)],
    )


def check_interpolation(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    """Quadrature vs gamma-oracle k, and Delta:1/2 Theta:1/2 = a."""
    tol = 1e-10 if tolerance is None else tolerance
    start = time.perf_counter()
    worst_route = worst_product = 0.0
    for p in _params(grid):
        k_quad = interpolation.half_index_delta(p, interpolation.HalfRoute.QUADRATURE_RATIO)
        k_oracle = interpolation.half_index_delta(p, interpolation.HalfRoute.GAMMA_ORACLE)
        worst_route = max(worst_route, abs(k_quad / k_oracle - 1.0))
        theta = interpolation.half_index_theta(p, rtol=max(tol, interpolation.AGREEMENT_RTOL))
        worst_product = max(worst_product, abs(k_quad * theta / p.a - 1.0))
    worst = max(worst_route, worst_product)
    return _finish(
        "3 interpolation identities", worst <= tol, worst, tol, start, 5.0,
        route_agreement=worst_route, delta_theta_product=worst_product,
    )


def check_reduction(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    tol = 1e-10 if tolerance is None else tolerance
    start = time.perf_counter()
    worst = 0.0
    for p in _params(grid):
        q = quadrature.Q_integral(p).value
        worst = max(worst, abs(quadrature.reduction_residual(p)) / q)
    return _finish("4 integral reduction", worst <= tol, worst, tol, start, 2.0)


def check_duality(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    """Four-parameter product: bitwise match with Wallis, and 100/N envelope."""
    start = time.perf_counter()
    mismatches = 0
    for p in _params(grid):
        spec = GeneralBetaSpec.from_params(p)
        for n in DUALITY_SAMPLE_N:
            if wallis.general_ratio_partial(spec, n) != wallis.wallis_partial(p, n):
                mismatches += 1
    N = 10**4
    worst = 0.0
    for values in DUALITY_SPECS:
        spec = GeneralBetaSpec(*values)
        err = abs(wallis.general_ratio_partial(spec, N) - wallis.general_limit(spec))
        worst = max(worst, N * err)
    ok = mismatches == 0 and worst <= 100.0
    return _finish("5 four-parameter duality", ok, worst, 100.0, start, 5.0, bitwise_mismatches=mismatches)


def check_euler_maclaurin(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    """K=4 expansion vs exact log products at x = 30..60, and divergence."""
    tol = 1e-12 if tolerance is None else tolerance
    start = time.perf_counter()
    worst = 0.0
    nonmonotone_points = 0
    for p in _params(grid):
        log_a = asymptotics.log_constant_closed_form(p, ProductKind.GAMMA)
        for x in range(30, 61):
            exact = products.log_product(ProductKind.GAMMA, p, x).log_value
            worst = max(worst, abs(asymptotics.em_log_gamma_form(p, x, 4, log_a) - exact))
        errors = asymptotics.truncation_errors(p, 10)
        if errors[asymptotics.MAX_ORDER] > min(errors.values()):
            nonmonotone_points += 1
    # at x = 1 the series turns around well inside K <= 8
    small = asymptotics.truncation_errors(ProductParams(1.0, 1.0), 1)
    k_star = min(small, key=small.get)
    genuine = k_star < asymptotics.MAX_ORDER and small[asymptotics.MAX_ORDER] > small[k_star]
    ok = worst <= tol and nonmonotone_points >= 1 and genuine
    return _finish(
        "6 Euler-Maclaurin accuracy", ok, worst, tol, start, 2.0,
        nonmonotone_points_x10=nonmonotone_points, k_star_x1=k_star,
    )


def check_constants(grid=DEFAULT_GRID, tolerance=None) -> CheckResult:
    value_tol = 1e-9 if tolerance is None else tolerance
    rel_tol = 1e-8 if tolerance is None else tolerance
    start = time.perf_counter()
    unit = ProductParams(1.0, 1.0)
    expected = {
        ProductKind.GAMMA: math.sqrt(2.0 * math.pi),
        ProductKind.DELTA: math.sqrt(2.0 * math.e),
        ProductKind.THETA: math.sqrt(math.pi),
    }
    value_dev = max(
        abs(asymptotics.constant_limit_fit(unit, form) / ref - 1.0) for form, ref in expected.items()
    )
    agreement = relation = 0.0
    for p in _params(grid):
        for form in ProductKind:
            fit = asymptotics.constant_limit_fit(p, form)
            closed = asymptotics.constant_closed_form(p, form)
            agreement = max(agreement, abs(fit / closed - 1.0))
        A, B, C = (asymptotics.constant_limit_fit(p, f) for f in ProductKind)
        k = interpolation.half_index_delta(p)
        res = asymptotics.relation_residuals(A, B, C, k)
        relation = max(relation, max(abs(v) for v in res.values()))
    ok = value_dev <= value_tol and agreement <= value_tol and relation <= rel_tol
    return _finish(
        "7 constants and relations", ok, max(value_dev, agreement, relation), value_tol, start, 5.0,
        unit_values=value_dev, fit_vs_closed=agreement, relations=relation,
    )


def check_coefficients(tolerance=None) -> CheckResult:
    start = time.perf_counter()
    listed = [Fraction(1, 2), Fraction(1, 6), Fraction(1, 6), Fraction(3, 10), Fraction(5, 6)]
    got = [bernoulli.euler_coefficient(k) for k in range(1, 6)]
    ok = got == listed
    return _finish(
        "8 coefficient table", ok, 0.0 if ok else 1.0, 0.0, start, 0.1,
        values=[str(v) for v in got],
    )


def check_exp_half(tolerance=None) -> CheckResult:
    tol = 1e-6 if tolerance is None else tolerance
    start = time.perf_counter()
    dev = abs(asymptotics.exp_half_limit(10**6) - math.sqrt(math.e))
    samples = sorted({int(round(10 ** (e / 4))) for e in range(0, 25)})
    values = [asymptotics.exp_half_limit(i) for i in samples]
    monotone = all(x < y for x, y in zip(values, values[1:]))
    return _finish("9 (1+1/2i)^i limit", dev <= tol and monotone, dev, tol, start, 0.1, monotone=monotone)


GRID_CHECKS = (
    check_splitting,
    check_interpolation,
    check_reduction,
    check_duality,
    check_euler_maclaurin,
    check_constants,
)
FIXED_CHECKS = (check_wallis_case, check_coefficients, check_exp_half)
ORDER = (
    check_splitting,
    check_wallis_case,
    check_interpolation,
    check_reduction,
    check_duality,
    check_euler_maclaurin,
    check_constants,
    check_coefficients,
    check_exp_half,
)


def run_all(grid=DEFAULT_GRID, tolerance=None) -> list[CheckResult]:
    """Run every check in order; an exception counts as a failure."""
    results = []
    for check in ORDER:
        start = time.perf_counter()
        try:
            if check in GRID_CHECKS:
                results.append(check(grid, tolerance))
            else:
                results.append(check(tolerance))
        except ArithmeticError as exc:
            name = (check.__doc__ or check.__name__).strip().splitlines()[0]
            results.append(
                _finish(check.__name__, False, math.inf, 0.0, start, math.inf, error=str(exc), summary=name)
            )
    return results
