"""Partial products of the Wallis-type infinite products and their convergence.

Members of

    a(a+2b)/(a+b)^2 * (a+2b)(a+4b)/(a+3b)^2 * ...  =  P/Q

tend to 1 like ``1 - b^2/(a+(2i-1)b)^2``, so partials converge at rate
``1/N``.  Partial products beyond ``LOG_SPACE_THRESHOLD`` members are
accumulated as compensated log sums.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from . import _kernels
from .params import ProductParams, check_index
from .quadrature import GeneralBetaSpec, Route, beta_integral

LOG_SPACE_THRESHOLD = 10**4


def wallis_member(params: ProductParams, i: int) -> float:
    """``(a+(2i-2)b)(a+2ib) / (a+(2i-1)b)^2`` for ``i >= 1``."""
    i = check_index(i, "i", minimum=1)
    a, b = params.a, params.b
    mid = a + (2 * i - 1) * b
    return (a + (2 * i - 2) * b) * (a + 2 * i * b) / (mid * mid)


def _ratio_partial(q: float, mp: float, p: float, mq: float, step: float, N: int) -> float:
    return _kernels.ratio_product(q, mp, p, mq, step, N, LOG_SPACE_THRESHOLD)


def wallis_partial(params: ProductParams, N: int) -> float:
    """Product of the first ``N`` members; tends to ``P/Q``."""
    N = check_index(N, "N")
    a, b = params.a, params.b
    apb = a + b
    # numerator starts a and (a+b)+b, denominator starts a+b twice, step 2b:
    # this association is shared with the four-parameter form below.
    return _ratio_partial(a, b + apb, apb, b + a, 2.0 * b, N)


def general_ratio_partial(spec: GeneralBetaSpec, N: int) -> float:
    """``N``-term truncation of

        q(m+p)/(p(m+q)) * (q+n)(m+p+n)/((p+n)(m+q+n)) * ...

    whose limit is ``I(p, m, n) / I(q, m, n)``.
    """
    N = check_index(N, "N")
    return _ratio_partial(spec.q, spec.m + spec.p, spec.p, spec.m + spec.q, spec.n, N)


def kk_partial(params: ProductParams, N: int) -> float:
    """Truncation of ``a * a(a+2b)(a+2b)(a+4b).../((a+b)(a+b)(a+3b)(a+3b)...)``.

    The lone leading ``a`` is kept apart; the remaining ``2N`` numerator and
    ``2N`` denominator factors are paired one to one, so every ratio is
    ``(a + 2*ceil(j/2)*b) / (a + b + 2*floor(j/2)*b)`` and stays O(1).
    The limit is ``a P/Q``.
    """
    N = check_index(N, "N")
    a, b = params.a, params.b
    return a * _kernels.alternating_ratio_product(
        a, a + b, 2.0 * b, 2 * N, 2 * LOG_SPACE_THRESHOLD
    )


def wallis_limit(params: ProductParams, route: Route | str = Route.TRANSFORMED) -> float:
    spec = GeneralBetaSpec.from_params(params)
    return general_limit(spec, route)


def general_limit(spec: GeneralBetaSpec, route: Route | str = Route.TRANSFORMED) -> float:
    num = beta_integral(GeneralBetaSpec.single(spec.p, spec.m, spec.n), route)
    den = beta_integral(GeneralBetaSpec.single(spec.q, spec.m, spec.n), route)
    return num.value / den.value


@dataclass
class ConvergenceReport:
    """Partials at each scheduled ``N`` against a quadrature reference.

    ``fitted_rate`` is the exponent ``r`` in ``|error| ~ N**-r``, fitted by
    least squares in log-log space over the last half of the schedule;
    ``None`` when fewer than two usable points exist.  ``envelope_constant``
    is ``max N*|error|`` over ``N >= 100`` (all points if none qualify).
    """

    partials: list[tuple[int, float]]
    reference: float
    fitted_rate: float | None
    envelope_constant: float
    label: dict = field(default_factory=dict)

    @property
    def abs_errors(self) -> list[float]:
        return [abs(v - self.reference) for _, v in self.partials]

    def rows(self) -> list[dict]:
        return [
            {"N": n, "partial": v, "reference": self.reference, "abs_error": e}
            for (n, v), e in zip(self.partials, self.abs_errors)
        ]

    def to_dict(self) -> dict:
        return {
            "inputs": dict(self.label),
            "partials": [[n, v] for n, v in self.partials],
            "reference": self.reference,
            "fitted_rate": self.fitted_rate,
            "envelope_constant": self.envelope_constant,
            "abs_errors": self.abs_errors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["N", "partial", "reference", "abs_error"])
        for row in self.rows():
            writer.writerow(
                [row["N"]] + [format(row[k], ".17g") for k in ("partial", "reference", "abs_error")]
            )
        return buf.getvalue()


def fit_decay_rate(ns, errors) -> float | None:
    """Least-squares slope ``-d log|err| / d log N`` over the last half."""
    pts = [(n, e) for n, e in zip(ns, errors) if e > 0.0]
    if len(pts) < 2:
        return None
    tail = pts[len(pts) // 2:]
    if len(tail) < 2:
        tail = pts[-2:]
    xs = [math.log(n) for n, _ in tail]
    ys = [math.log(e) for _, e in tail]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return -sxy / sxx


def converge(
    target: ProductParams | GeneralBetaSpec,
    schedule,
    route: Route | str = Route.TRANSFORMED,
) -> ConvergenceReport:
    """Evaluate partial products along ``schedule`` and fit the tail decay.

    ``target`` is either ``ProductParams`` (the Wallis product) or a
    ``GeneralBetaSpec`` (the four-parameter product).
    """
    schedule = [check_index(n, "N") for n in schedule]
    if not schedule:
        raise ValueError("schedule must be nonempty")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    if isinstance(target, ProductParams):
        reference = wallis_limit(target, route)
        partial = wallis_partial
        label = {"a": target.a, "b": target.b}
    else:
        reference = general_limit(target, route)
        partial = general_ratio_partial
        label = {"p": target.p, "q": target.q, "m": target.m, "n": target.n}
    partials = [(n, partial(target, n)) for n in schedule]
    errors = [abs(v - reference) for _, v in partials]
    rate = fit_decay_rate(schedule, errors)
    scaled = [n * e for n, e in zip(schedule, errors) if n >= 100]
    if not scaled:
        scaled = [n * e for n, e in zip(schedule, errors)]
    return ConvergenceReport(partials, reference, rate, max(scaled), label)
