"""Command-line interface.

Exit codes: 0 success, 1 validation error, 2 numerical failure
(non-convergence or a failed cross-check), 3 invariant violation in
``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time
from dataclasses import dataclass, field

from . import acceptance, asymptotics, interpolation, products, quadrature, wallis
from .errors import ConvergenceError, IntegrityError, ProductRangeError, ValidationError
from .params import ProductKind, ProductParams, parse_decimal

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL, EXIT_VIOLATION = 0, 1, 2, 3


@dataclass
class OutputRecord:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "residuals": self.residuals,
            "elapsed_ms": self.elapsed_ms,
        }


def _number(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _number(obj)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {dumps(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, float):
        out[prefix] = _number(value)
    elif isinstance(value, (list, tuple)):
        out[prefix] = dumps(value)
    else:
        out[prefix] = value


def records_to_csv(records) -> str:
    rows = []
    for rec in records:
        flat = {}
        _flatten("", rec.to_dict(), flat)
        rows.append(flat)
    columns = sorted({k for row in rows for k in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _decimal(name):
    def parse(text):
        try:
            return parse_decimal(text, name)
        except ValidationError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    return parse


def _schedule(text):
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"schedule must be comma-separated integers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("schedule is empty")
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ValidationError(message)


def _global_options(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("json", "csv"), default=default if suppress else "json")
    parser.add_argument("--tolerance", type=float, default=default)
    parser.add_argument("--seed", type=int, default=default if suppress else 0)
    parser.add_argument(
        "--timing", action="store_true", default=default if suppress else False,
        help="report wall time in elapsed_ms (otherwise 0, keeping output byte-identical)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eulerprod", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("product", "stepped product value")
    p.add_argument("--form", choices=[k.value for k in ProductKind], required=True)
    p.add_argument("--a", type=_decimal("a"), required=True)
    p.add_argument("--b", type=_decimal("b"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--log", action="store_true", help="return the natural log instead")

    p = add("interpolate", "half-index values k, Theta:1/2, Gamma:1/2")
    p.add_argument("--a", type=_decimal("a"), required=True)
    p.add_argument("--b", type=_decimal("b"), required=True)
    p.add_argument("--route", choices=("quad", "oracle"), default="quad")

    p = add("wallis", "Wallis-type partial products and convergence")
    p.add_argument("--a", type=_decimal("a"), required=True)
    p.add_argument("--b", type=_decimal("b"), required=True)
    p.add_argument("--schedule", type=_schedule, required=True)

    p = add("general-product", "four-parameter partial product vs integral ratio")
    for name in ("p", "q", "m", "n"):
        p.add_argument(f"--{name}", type=_decimal(name), required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("quadrature", "Beta-type integral")
    for name in ("p", "m", "n"):
        p.add_argument(f"--{name}", type=_decimal(name), required=True)
    p.add_argument("--route", choices=("transformed", "closed"), default="transformed")
    p.add_argument("--budget", type=int, default=quadrature.DEFAULT_MAX_EVALUATIONS,
                   help="maximum integrand evaluations")

    p = add("constants", "asymptotic constants A, B, C and their relations")
    p.add_argument("--a", type=_decimal("a"), required=True)
    p.add_argument("--b", type=_decimal("b"), required=True)
    p.add_argument("--order", type=int, default=asymptotics.DEFAULT_ORDER)
    p.add_argument("--xref", type=int, default=asymptotics.DEFAULT_XREF)

    p = add("verify", "run the acceptance checks over a grid")
    p.add_argument("--grid", default="default", help="'default' or a JSON file of [a, b] pairs")
    return parser


def _cmd_product(args):
    params = ProductParams(args.a, args.b)
    inputs = {"form": args.form, "a": args.a, "b": args.b, "n": args.n, "log": args.log}
    if args.log:
        outputs = {"log_value": products.log_product(args.form, params, args.n).log_value}
    else:
        outputs = {"value": products.product(args.form, params, args.n)}
    return [OutputRecord("product", inputs, outputs)], EXIT_OK


def _cmd_interpolate(args):
    params = ProductParams(args.a, args.b)
    rtol = args.tolerance if args.tolerance is not None else interpolation.AGREEMENT_RTOL
    if args.route == "quad":
        k = interpolation.half_index_delta(params)
        theta = interpolation.half_index_theta(params, rtol)
        gamma = interpolation.half_index_gamma(params, rtol)
    else:
        vals = interpolation.half_index_values(params, args.route)
        k, theta, gamma = vals.k, vals.theta_half, vals.gamma_half
    outputs = {"k": k, "theta_half": theta, "gamma_half": gamma, "route": args.route}
    residuals = {"k*theta_half - a": k * theta - args.a, "k*theta_half/a - 1": k * theta / args.a - 1.0}
    return [OutputRecord("interpolate", {"a": args.a, "b": args.b}, outputs, residuals)], EXIT_OK


def _cmd_wallis(args):
    params = ProductParams(args.a, args.b)
    report = wallis.converge(params, args.schedule)
    if args.format == "csv":
        return report, EXIT_OK
    outputs = {
        "partials": [[n, v] for n, v in report.partials],
        "reference": report.reference,
        "fitted_rate": report.fitted_rate,
        "envelope_constant": report.envelope_constant,
    }
    residuals = {"abs_errors": report.abs_errors}
    inputs = {"a": args.a, "b": args.b, "schedule": list(args.schedule)}
    return [OutputRecord("wallis", inputs, outputs, residuals)], EXIT_OK


def _cmd_general(args):
    spec = quadrature.GeneralBetaSpec(args.p, args.q, args.m, args.n)
    partial = wallis.general_ratio_partial(spec, args.terms)
    reference = wallis.general_limit(spec)
    err = abs(partial - reference)
    inputs = {"p": args.p, "q": args.q, "m": args.m, "n": args.n, "terms": args.terms}
    outputs = {"partial": partial, "reference": reference}
    residuals = {"abs_error": err, "terms*abs_error": args.terms * err}
    return [OutputRecord("general-product", inputs, outputs, residuals)], EXIT_OK


def _cmd_quadrature(args):
    spec = quadrature.GeneralBetaSpec.single(args.p, args.m, args.n)
    result = quadrature.beta_integral(spec, args.route, max_evaluations=args.budget)
    inputs = {"p": args.p, "m": args.m, "n": args.n, "route": args.route}
    return [OutputRecord("quadrature", inputs, result.to_dict())], EXIT_OK


def _cmd_constants(args):
    params = ProductParams(args.a, args.b)
    kwargs = {}
    if args.tolerance is not None:
        kwargs = {"rtol": args.tolerance, "agreement_rtol": args.tolerance}
    consts = asymptotics.verify_constant_relations(params, args.xref, args.order, **kwargs)
    data = consts.to_dict()
    residuals = data.pop("residuals")
    inputs = {"a": args.a, "b": args.b, "order": args.order, "xref": args.xref}
    return [OutputRecord("constants", inputs, data, residuals)], EXIT_OK


def _load_grid(spec: str, seed: int):
    if spec == "default":
        grid = list(acceptance.DEFAULT_GRID)
    else:
        try:
            with open(spec) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read grid file {spec!r}: {exc}") from None
        try:
            grid = [(float(a), float(b)) for a, b in raw]
        except (TypeError, ValueError):
            raise ValidationError("grid file must hold a JSON list of [a, b] pairs") from None
        for a, b in grid:
            ProductParams(a, b)
    if seed:
        rng = random.Random(seed)
        grid += [(round(rng.uniform(0.5, 4.0), 3), round(rng.uniform(0.5, 2.0), 3)) for _ in range(3)]
    return grid


def _cmd_verify(args):
    grid = _load_grid(args.grid, args.seed)
    results = acceptance.run_all(grid, args.tolerance)
    records = []
    for r in results:
        outputs = {"passed": r.passed, "metric": r.metric, "threshold": r.threshold}
        outputs.update({k: v for k, v in r.details.items() if isinstance(v, (bool, int, float, str))})
        rec = OutputRecord("verify", {"criterion": r.name, "grid_points": len(grid)}, outputs)
        if args.timing:
            rec.elapsed_ms = int(round(r.elapsed_s * 1000))
        records.append(rec)
    for r in results:
        print(r.line(), file=sys.stderr)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION
    return records, code


COMMANDS = {
    "product": _cmd_product,
    "interpolate": _cmd_interpolate,
    "wallis": _cmd_wallis,
    "general-product": _cmd_general,
    "quadrature": _cmd_quadrature,
    "constants": _cmd_constants,
    "verify": _cmd_verify,
}


def run(argv=None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        for name, default in (("format", "json"), ("tolerance", None), ("seed", 0), ("timing", False)):
            if not hasattr(args, name):
                setattr(args, name, default)
        start = time.perf_counter()
        output, code = COMMANDS[args.command](args)
        elapsed = int(round((time.perf_counter() - start) * 1000))
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ProductRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ConvergenceError, IntegrityError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        best = getattr(exc, "best_estimate", None)
        if best is not None:
            print(f"best estimate: {best}", file=sys.stderr)
        return EXIT_NUMERICAL

    if isinstance(output, wallis.ConvergenceReport):
        stdout.write(output.to_csv())
        return code
    if args.timing and args.command != "verify":
        for rec in output:
            rec.elapsed_ms = elapsed
    if args.format == "csv":
        stdout.write(records_to_csv(output))
    elif len(output) == 1 and args.command != "verify":
        stdout.write(dumps(output[0].to_dict()) + "\n")
    else:
        stdout.write(dumps([rec.to_dict() for rec in output]) + "\n")
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))
