#  Copyright 2026 homogeneous-taylor contributors.
import json
import logging
import sys
from typing import List, Optional, Sequence, TextIO

import toml
from tabulate import tabulate

from ..homfun import make_function
from ..polynomial import ReportMode, binomial_table, build_report, is_kronecker_table
from ..riskagg import allocation_report, capital_quadratic_identity, load_portfolio
from ..utils import DegreeMismatchError, DomainError, HomTaylorError, NotPositiveDefiniteError, ShapeError
from ..verify import run_suites
from .run_config import RunConfig, build_parser, normalize_argv, resolve_run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

FLOAT_FORMAT = ".9g"


def _dump(payload: object) -> str:
    return json.dumps(payload, sort_keys=True)


def cmd_taylor(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """
    Build the TaylorReport for one function and pair of points.

    :param config: resolved invocation with function_spec, a, b and optional order
    :param out: stream for the report

    :return: int = 0 when the identity gap is within tolerance, 1 otherwise
    """
    out = out or sys.stdout
    f = make_function(config.function_spec)
    order = config.order if config.order is not None else f.integer_degree
    if order is None:
        raise DegreeMismatchError(f"{f.name} has non-integer degree {f.degree:g}, no collapsed form exists")
    report = build_report(f, config.a, config.b, order, ReportMode.THEOREM, config.settings.SEGMENT_SAMPLES)
    limit = config.settings.TOL * (1.0 + abs(report.f_a) + abs(report.f_b))
    passed = report.identity_gap <= limit

    if config.json:
        out.write(_dump(report.to_json()) + "\n")
    else:
        out.write(f"{f.name}, order {report.order}\n")
        rows = [
            ["f(a)", report.f_a],
            ["f(b)", report.f_b],
            ["taylor_standard", report.taylor_standard],
            ["taylor_collapsed", report.taylor_collapsed],
            ["identity_gap", report.identity_gap],
            ["remainder", report.remainder],
        ]
        rows.extend([f"euler_residual[{k}]", r] for k, r in enumerate(report.euler_residuals, start=1))
        out.write(tabulate(rows, tablefmt="simple", floatfmt=FLOAT_FORMAT) + "\n")
        out.write(f"{'PASS' if passed else 'FAIL'}: identity gap {report.identity_gap:.3e} (limit {limit:.3e})\n")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """
    Run the property suites and print one row per suite.

    :return: int = 0 when every suite passes, 1 otherwise
    """
    out = out or sys.stdout
    results = run_suites(list(config.suites), config.settings, config.max_m)
    passed = all(result.passed for result in results)

    if config.json:
        out.write(_dump([result.to_json() for result in results]) + "\n")
    else:
        rows = [
            [r.name, r.trials, r.max_residual, r.tolerance, "pass" if r.passed else "FAIL", r.note] for r in results
        ]
        headers = ["suite", "checks", "max residual", "tolerance", "result", "note"]
        out.write(tabulate(rows, headers=headers, floatfmt=FLOAT_FORMAT) + "\n")
        for result in results:
            if result.failure:
                out.write(f"{result.name} worst failure: {result.failure}\n")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_identity(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """
    Print the table of alternating binomial sums for m = 0..max_m.

    :return: int = 0 when the table is the Kronecker delta pattern
    """
    out = out or sys.stdout
    table = binomial_table(config.max_m)
    passed = is_kronecker_table(table)

    if config.json:
        out.write(_dump({"max_m": config.max_m, "table": table, "kronecker": passed}) + "\n")
    else:
        headers = ["m"] + [f"q={q}" for q in range(config.max_m + 1)]
        rows = [[m] + row + [""] * (config.max_m - m) for m, row in enumerate(table)]
        out.write(tabulate(rows, headers=headers) + "\n")
        out.write(f"{'PASS' if passed else 'FAIL'}: table {'equals' if passed else 'differs from'} delta(q, m)\n")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_risk(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """
    Aggregate and allocate the capital of a portfolio, and optionally check the quadratic
    identity at a target exposure vector.

    :return: int = 0 when the allocation and identity gaps are within tolerance
    """
    out = out or sys.stdout
    portfolio = load_portfolio(config.portfolio)
    allocation = allocation_report(portfolio)
    passed = allocation.check_sum_gap <= config.settings.TOL
    identity = None
    if config.target is not None:
        if len(config.target) != portfolio.dim:
            raise ShapeError(f"--target has {len(config.target)} coordinates, the portfolio has {portfolio.dim}")
        identity = capital_quadratic_identity(portfolio, config.target, config.settings.SEGMENT_SAMPLES)
        passed = passed and identity.gap <= config.settings.TOL * (1.0 + abs(identity.rhs))

    if config.json:
        payload = allocation.to_json()
        if identity is not None:
            payload["quadratic_identity"] = identity.to_json()
        out.write(_dump(payload) + "\n")
    else:
        labels = allocation.labels or [f"risk {i + 1}" for i in range(portfolio.dim)]
        rows = [[label, x, share] for label, x, share in zip(labels, portfolio.exposures.tolist(), allocation.allocations)]
        out.write(tabulate(rows, headers=["risk", "exposure", "allocation"], floatfmt=FLOAT_FORMAT) + "\n")
        out.write(f"capital: {allocation.capital:{FLOAT_FORMAT}}\n")
        out.write(f"check_sum_gap: {allocation.check_sum_gap:{FLOAT_FORMAT}}\n")
        if identity is not None:
            out.write(
                f"quadratic identity: lhs {identity.lhs:{FLOAT_FORMAT}}, rhs {identity.rhs:{FLOAT_FORMAT}}, "
                f"gap {identity.gap:{FLOAT_FORMAT}}\n"
            )
        out.write(f"{'PASS' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_FAILED


COMMAND_HANDLERS = {"taylor": cmd_taylor, "verify": cmd_verify, "identity": cmd_identity, "risk": cmd_risk}


def _configure_logging(config: RunConfig) -> None:
    level = logging.INFO if config.verbose else config.settings.LOG_LEVEL.upper()
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger("homogeneous").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``homtaylor`` command.

    :param argv: arguments without the program name, defaults to sys.argv[1:]

    :return: int = exit code, 0 ok, 1 failed check, 2 usage or spec error, 3 domain error
    """
    arguments: List[str] = normalize_argv(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(arguments)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    try:
        config = resolve_run_config(args)
        _configure_logging(config)
        logger.info(f"Running {config.command} with tolerance {config.settings.TOL:g}")
        return COMMAND_HANDLERS[config.command](config)
    except (DomainError, NotPositiveDefiniteError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_DOMAIN
    except HomTaylorError as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE
    except (OSError, toml.TomlDecodeError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE
