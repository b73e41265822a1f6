#  Copyright 2026 homogeneous-taylor contributors.
import argparse
import json
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..homfun import FunctionSpec, euclidean_spec, load_function_spec
from ..utils import ShapeError, SpecError, TaylorConfig, load_config
from ..verify import SUITES

COMMANDS = ("taylor", "verify", "identity", "risk")
CLI_FAMILIES = ("euclidean", "quadratic_root", "monomial", "pnorm")
SUITE_CHOICES = tuple(SUITES) + ("all",)
VECTOR_FLAGS = ("--a", "--b", "--alpha", "--target")

# a value such as -1,0 would otherwise be read as an unknown option
_NEGATIVE_VALUE = re.compile(r"^-\.?\d")


@dataclass
class RunConfig:
    """
    One resolved invocation: the command, the function to expand and the run settings, with
    flags applied on top of the TOML file and environment defaults.
    """

    command: str
    settings: TaylorConfig
    function_spec: Optional[FunctionSpec] = None
    a: Optional[List[float]] = None
    b: Optional[List[float]] = None
    order: Optional[int] = None
    json: bool = False
    suites: Sequence[str] = ("all",)
    max_m: int = 12
    portfolio: Optional[str] = None
    target: Optional[List[float]] = None
    verbose: bool = False


def parse_vector(text: str, flag: str) -> List[float]:
    """
    Parse a comma-separated decimal list such as ``3,4`` or ``-1,0.5``.

    :param text: raw flag value
    :param flag: flag name for error messages

    :return: List[float] = the parsed values
    """
    try:
        values = [float(item) for item in text.split(",") if item.strip() != ""]
    except ValueError as error:
        raise SpecError(f"{flag} must be a comma-separated list of numbers, got '{text}'") from error
    if not values:
        raise SpecError(f"{flag} must not be empty")
    return values


def normalize_argv(argv: Sequence[str]) -> List[str]:
    """
    Glue vector flags to values that start with a minus sign, ``--b -1,0`` becomes ``--b=-1,0``.
    """
    tokens = list(argv)
    normalized: List[str] = []
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if token in VECTOR_FLAGS and index + 1 < len(tokens) and _NEGATIVE_VALUE.match(tokens[index + 1]):
            normalized.append(f"{token}={tokens[index + 1]}")
            index += 2
            continue
        normalized.append(token)
        index += 1
    return normalized


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", help="Emit the report as JSON.", action="store_true")
    parser.add_argument("--tol", help="Tolerance for the pass/fail decision.", type=float)
    parser.add_argument("--config", help="TOML file with a [homtaylor] table of overrides.", type=str)
    parser.add_argument("-v", "--verbose", help="Log progress to stderr.", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser("homtaylor", description="Taylor polynomials of positively homogeneous functions.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    taylor = subparsers.add_parser("taylor", help="Compare the standard and collapsed Taylor polynomials.")
    taylor.add_argument("--family", help="Function family.", choices=CLI_FAMILIES)
    taylor.add_argument("--alpha", help="Monomial exponents, e.g. 2,1.", type=str)
    taylor.add_argument("--p", help="Exponent of the p-norm, p > 1.", type=float)
    taylor.add_argument("--power", help="Raise a degree-1 function to this integer power.", type=int)
    taylor.add_argument("--R", help="Matrix of quadratic_root as a JSON list of rows.", type=str)
    taylor.add_argument("--spec", help="JSON file holding a full function spec.", type=str)
    taylor.add_argument("--a", help="Expansion point, e.g. 3,4.", type=str, required=True)
    taylor.add_argument("--b", help="Evaluation point, e.g. 1,0.", type=str, required=True)
    taylor.add_argument("--order", help="Taylor order, defaults to the degree of the function.", type=int)
    _add_common(taylor)

    verify = subparsers.add_parser("verify", help="Run the seeded property suites.")
    verify.add_argument("--suite", help="Suite to run, may be repeated.", choices=SUITE_CHOICES, action="append")
    verify.add_argument("--trials", help="Random instances per suite.", type=int)
    verify.add_argument("--seed", help="Base seed, trial i uses seed + i.", type=int)
    verify.add_argument("--max-m", help="Highest order of the binomial suite.", type=int, default=12)
    _add_common(verify)

    identity = subparsers.add_parser("identity", help="Print the alternating binomial sum table.")
    identity.add_argument("--max-m", help="Highest order m, at most 20.", type=int, default=12)
    _add_common(identity)

    risk = subparsers.add_parser("risk", help="Aggregate capital and allocate it by Euler's theorem.")
    risk.add_argument("--portfolio", help="JSON file with R, exposures and optional labels.", type=str, required=True)
    risk.add_argument("--target", help="Exposures for the quadratic identity check, e.g. 2,0.", type=str)
    _add_common(risk)
    return parser


def _function_spec(args: argparse.Namespace, dim: int) -> FunctionSpec:
    if args.spec:
        spec = load_function_spec(args.spec)
    elif args.family == "euclidean":
        spec = euclidean_spec(dim)
    elif args.family == "quadratic_root":
        if not args.R:
            raise SpecError("--family quadratic_root needs --R")
        try:
            matrix = json.loads(args.R)
        except json.JSONDecodeError as error:
            raise SpecError(f"--R is not valid JSON: {error}") from error
        spec = FunctionSpec.from_json({"family": "quadratic_root", "R": matrix})
    elif args.family == "monomial":
        if not args.alpha:
            raise SpecError("--family monomial needs --alpha")
        spec = FunctionSpec("monomial", alpha=parse_vector(args.alpha, "--alpha"))
    elif args.family == "pnorm":
        if args.p is None:
            raise SpecError("--family pnorm needs --p")
        spec = FunctionSpec("pnorm", p=args.p)
    else:
        raise SpecError("Either --family or --spec is required")
    if args.power is not None:
        spec = FunctionSpec("power", power=args.power, inner=spec)
    return spec


def resolve_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Resolve parsed arguments into a RunConfig. Flags win over the TOML file, which wins over the
    environment defaults of TaylorConfig.

    :param args: namespace from build_parser

    :return: RunConfig = the validated invocation
    """
    settings = load_config(args.config)
    if args.tol is not None:
        settings.TOL = args.tol
    if not settings.TOL > 0.0:
        raise SpecError(f"Tolerance must be positive, got {settings.TOL}")
    config = RunConfig(command=args.command, settings=settings, json=args.json, verbose=args.verbose)

    if args.command == "taylor":
        config.a = parse_vector(args.a, "--a")
        config.b = parse_vector(args.b, "--b")
        if len(config.a) != len(config.b):
            raise ShapeError(f"--a has {len(config.a)} coordinates, --b has {len(config.b)}")
        config.function_spec = _function_spec(args, len(config.a))
        config.order = args.order
    elif args.command == "verify":
        if args.trials is not None:
            settings.TRIALS = args.trials
        if args.seed is not None:
            settings.SEED = args.seed
        if settings.TRIALS < 1:
            raise SpecError(f"--trials must be at least 1, got {settings.TRIALS}")
        config.suites = args.suite or ["all"]
        config.max_m = args.max_m
    elif args.command == "identity":
        config.max_m = args.max_m
    else:
        config.portfolio = args.portfolio
        config.target = parse_vector(args.target, "--target") if args.target else None
    return config
