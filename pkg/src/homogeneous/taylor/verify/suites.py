#  Copyright 2026 homogeneous-taylor contributors.
import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..homfun import (
    FunctionSpec,
    HomogeneousFunction,
    evaluate,
    euclidean_spec,
    function_jet,
    homogeneity_residual,
    make_function,
    power_function,
    sample_pair,
    sample_point,
    trial_rng,
)
from ..homfun.sampling import MAX_REJECTIONS
from ..jetdiff import extract_tensor, fd_tensor
from ..polynomial import (
    ReportMode,
    alternating_binomial_sum,
    build_report,
    derivative_tensors,
    lower_from_top,
    remainder_ratios,
    taylor_binomial_form,
    taylor_collected_form,
)
from ..riskagg import Portfolio, aggregate_capital, allocation_report, capital_quadratic_identity, random_portfolio
from ..symtensor import apply_uniform, relative_residual, tensor_close
from ..utils import DomainError, TaylorConfig
from .catalog import PNORM_SHAPES, CatalogEntry, degree_one_catalog, full_catalog, monomial_catalog, theorem_catalog

logger = logging.getLogger(__name__)

EULER_POINTS = 20
FD_POINTS = 20
FD_MAX_ORDER = 3
FD_MAX_DIM = 3
HOMOGENEITY_PAIRS = 50
HOMOGENEITY_TOL = 1e-10
POLYNOMIAL_TOL = 1e-10
ALLOCATION_TOL = 1e-12
RISK_IDENTITY_TOL = 1e-10
COROLLARY_ORDERS = range(1, 7)
REMAINDER_STEPS = (0.1, 0.05, 0.025)
REMAINDER_SLACK = 0.25
REMAINDER_FLOOR = 1e-12


@dataclass
class SuiteResult:
    name: str
    trials: int
    max_residual: float
    tolerance: float
    passed: bool
    failure: Optional[str] = None
    note: str = ""

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


class SuiteTracker:
    """
    Accumulates relative residuals of one suite and remembers the worst instance.
    """

    def __init__(self, name: str, tolerance: float) -> None:
        self.name = name
        self.tolerance = tolerance
        self.trials = 0
        self.max_residual = 0.0
        self.failures = 0
        self.worst: Optional[str] = None
        self.worst_excess = -math.inf

    def record(self, residual: float, detail: Callable[[], str], tolerance: Optional[float] = None) -> None:
        limit = self.tolerance if tolerance is None else tolerance
        self.trials += 1
        self.max_residual = max(self.max_residual, residual)
        excess = residual / limit if limit > 0 else (math.inf if residual > 0 else 0.0)
        if not residual <= limit:
            self.failures += 1
            if excess > self.worst_excess:
                self.worst_excess = excess
                self.worst = f"{detail()}: residual {residual:.3e} > {limit:.1e}"

    def result(self, note: str = "") -> SuiteResult:
        passed = self.failures == 0
        if passed:
            logger.info(f"Suite {self.name} passed {self.trials} checks, max residual {self.max_residual:.3e}")
        else:
            logger.warning(f"Suite {self.name} failed {self.failures} of {self.trials} checks: {self.worst}")
        return SuiteResult(self.name, self.trials, self.max_residual, self.tolerance, passed, self.worst, note)


def _fmt(vector: np.ndarray) -> str:
    return "(" + ", ".join(f"{v:.17g}" for v in np.asarray(vector).tolist()) + ")"


def _identity_scale(f_a: float, f_b: float) -> float:
    return 1.0 + abs(f_a) + abs(f_b)


def _theorem_trials(
    tracker: SuiteTracker, entry: CatalogEntry, m: int, mode: ReportMode, trials: int, seed: int, samples: int
) -> None:
    f = entry.function
    for trial in range(trials):
        a, b = sample_pair(f, trial_rng(seed, trial), entry.dim, samples)
        report = build_report(f, a, b, m, mode, samples)
        tracker.record(
            report.identity_gap / _identity_scale(report.f_a, report.f_b),
            lambda: f"seed {seed + trial}: {f.name} m={m} a={_fmt(a)} b={_fmt(b)}",
        )


def central_suite(config: TaylorConfig) -> SuiteResult:
    """
    Standard against collapsed Taylor polynomial for every integer-degree catalog function.
    """
    tracker = SuiteTracker("central", config.TOL)
    for entry in theorem_catalog(config.SEED):
        _theorem_trials(tracker, entry, entry.degree, ReportMode.THEOREM, config.TRIALS, config.SEED, config.SEGMENT_SAMPLES)
    return tracker.result()


def corollary_suite(config: TaylorConfig) -> SuiteResult:
    """
    The same comparison for f^m, f of degree 1, m = 1..6.
    """
    tracker = SuiteTracker("corollary", config.TOL)
    for entry in degree_one_catalog(config.SEED):
        for m in COROLLARY_ORDERS:
            _theorem_trials(tracker, entry, m, ReportMode.COROLLARY, config.TRIALS, config.SEED, config.SEGMENT_SAMPLES)
    return tracker.result()


def euler_suite(config: TaylorConfig) -> SuiteResult:
    """
    Euler's relation between consecutive derivative tensors, every level k <= m.
    """
    tracker = SuiteTracker("euler", config.EULER_TOL)
    for entry in full_catalog(config.SEED):
        f = entry.function
        if f.integer_degree is None:
            continue
        m = f.integer_degree
        for trial in range(min(config.TRIALS, EULER_POINTS)):
            a = sample_point(f, trial_rng(config.SEED, trial), entry.dim)
            report = build_report(f, a, a, m, ReportMode.THEOREM, config.SEGMENT_SAMPLES)
            tracker.record(max(report.euler_residuals), lambda: f"seed {config.SEED + trial}: {f.name} a={_fmt(a)}")
    return tracker.result()


def homogeneity_suite(config: TaylorConfig) -> SuiteResult:
    """
    f(lambda x) = lambda^m f(x), and the gradient scaling with lambda^(m-1).
    """
    tracker = SuiteTracker("homogeneity", HOMOGENEITY_TOL)
    for entry in full_catalog(config.SEED):
        f = entry.function
        for trial in range(min(config.TRIALS, HOMOGENEITY_PAIRS)):
            rng = trial_rng(config.SEED, trial)
            x = sample_point(f, rng, entry.dim)
            scale = float(rng.uniform(0.05, 4.0))
            detail = lambda: f"seed {config.SEED + trial}: {f.name} x={_fmt(x)} lambda={scale:.17g}"  # noqa: E731
            tracker.record(homogeneity_residual(f, x, scale) / (1.0 + abs(evaluate(f, x))), detail)
            gradient = extract_tensor(function_jet(f, x, 1), 1)
            scaled_gradient = extract_tensor(function_jet(f, scale * x, 1), 1)
            tracker.record(relative_residual(scaled_gradient, gradient.scaled(scale ** (f.degree - 1.0))), detail)
    return tracker.result()


def _smooth_point(entry: CatalogEntry, rng: np.random.Generator) -> np.ndarray:
    # quadratic roots lose smoothness near the null cone, keep x^T R x >= 1
    f = entry.function
    while True:
        point = sample_point(f, rng, entry.dim)
        if f.spec.base_family() != "quadratic_root" or evaluate(f, point) ** (2.0 / f.degree) >= 1.0:
            return point


def fd_suite(config: TaylorConfig) -> SuiteResult:
    """
    Jet-derived tensors of order k <= 3 against the central finite difference oracle.
    """
    tracker = SuiteTracker("fd", config.FD_TOL)
    for entry in full_catalog(config.SEED):
        if entry.dim > FD_MAX_DIM:
            continue
        f = entry.function
        for trial in range(min(config.TRIALS, FD_POINTS)):
            a = _smooth_point(entry, trial_rng(config.SEED, trial))
            jet = function_jet(f, a, FD_MAX_ORDER)
            for k in range(FD_MAX_ORDER + 1):
                exact, estimate = extract_tensor(jet, k), fd_tensor(f, a, k)
                _, residual = tensor_close(exact, estimate, config.FD_TOL)
                scale = 1.0 + max(np.max(np.abs(exact.coeffs)), np.max(np.abs(estimate.coeffs)))
                tracker.record(residual / scale, lambda: f"seed {config.SEED + trial}: {f.name} k={k} a={_fmt(a)}")
    return tracker.result()


def binomial_suite(config: TaylorConfig, max_m: int = 12) -> SuiteResult:
    """
    The alternating binomial sums are exactly the Kronecker delta, zero tolerance.
    """
    tracker = SuiteTracker("binomial", 0.0)
    for m in range(max_m + 1):
        for q in range(m + 1):
            value = alternating_binomial_sum(m, q)
            tracker.record(float(abs(value - (1 if q == m else 0))), lambda: f"m={m} q={q} sum={value}")
    return tracker.result(note=f"{tracker.trials} (m, q) pairs")


def polynomial_suite(config: TaylorConfig) -> SuiteResult:
    """
    Homogeneous polynomials equal their Taylor polynomial of full order: the remainder vanishes.
    """
    tracker = SuiteTracker("polynomial", POLYNOMIAL_TOL)
    for entry in monomial_catalog():
        f = entry.function
        if not all(float(a).is_integer() for a in f.spec.alpha):
            continue
        for trial in range(config.TRIALS):
            a, b = sample_pair(f, trial_rng(config.SEED, trial), entry.dim, config.SEGMENT_SAMPLES)
            report = build_report(f, a, b, entry.degree, ReportMode.THEOREM, config.SEGMENT_SAMPLES)
            tracker.record(
                abs(report.remainder) / (1.0 + abs(report.f_b)),
                lambda: f"seed {config.SEED + trial}: {f.name} a={_fmt(a)} b={_fmt(b)}",
            )
    return tracker.result()


def _directional_coefficients(
    f: HomogeneousFunction, a: np.ndarray, u: np.ndarray, lowest: int, highest: int
) -> List[float]:
    # Taylor coefficients of s -> f(a + s u) for s^lowest .. s^highest
    jet = function_jet(f, a, highest)
    return [apply_uniform(extract_tensor(jet, k), u) / math.factorial(k) for k in range(lowest, highest + 1)]


def _remainder_pair(entry: CatalogEntry, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Expansion point a and target b = a + rho u for a unit direction u off the ray through a, where
    the remainder vanishes. rho is halved until the two terms after the leading one contribute at
    most REMAINDER_SLACK of it at the largest step, and the pair is redrawn when the smallest
    half-step remainder falls below REMAINDER_FLOOR relative to f(a).
    """
    f, m = entry.function, entry.degree
    t_max, t_min = max(REMAINDER_STEPS), min(REMAINDER_STEPS) / 2.0
    for _ in range(MAX_REJECTIONS):
        a = _smooth_point(entry, rng)
        u = rng.standard_normal(a.size)
        u -= (u @ a) / (a @ a) * a
        if np.linalg.norm(u) < 1e-6:
            continue
        u /= np.linalg.norm(u)
        leading, *tail = _directional_coefficients(f, a, u, m + 1, m + 3)
        if leading == 0.0:
            continue
        # the largest step moves at most half of the smallest coordinate
        rho = 5.0 * float(np.min(a))
        while sum(abs(c) * (rho * t_max) ** j for j, c in enumerate(tail, start=1)) > REMAINDER_SLACK * abs(leading):
            rho /= 2.0
        if abs(leading) * (rho * t_min) ** (m + 1) >= REMAINDER_FLOOR * (1.0 + abs(evaluate(f, a))):
            return a, a + rho * u
    raise DomainError(f"Could not sample a remainder instance for {f.name}")


def remainder_bound(m: int) -> float:
    return 0.6 * 2.0 ** (-m) + 0.2


def remainder_suite(config: TaylorConfig) -> SuiteResult:
    """
    The remainder of the order-m polynomial shrinks like t^(m+1) along the segment. Checked as
    ratio excess over 0.6 * 2^-m + 0.2, plus the fixed Euclidean instance whose ratio is near 1/4.
    """
    tracker = SuiteTracker("remainder", 0.0)
    euclidean = make_function(euclidean_spec(2))
    for step in remainder_ratios(euclidean, [3.0, 4.0], [1.0, 0.0], 1, REMAINDER_STEPS[:2]):
        ratio = step.ratio if step.ratio is not None else math.inf
        excess = max(0.15 - ratio, ratio - 0.45, 0.0)
        tracker.record(excess, lambda: f"euclidean a=(3, 4) b=(1, 0) t={step.t} ratio={ratio:.6f}")

    entries = [CatalogEntry(euclidean, 2)]
    for p, n in PNORM_SHAPES:
        pnorm = make_function(FunctionSpec("pnorm", p=p))
        entries.extend(CatalogEntry(power_function(pnorm, m), n) for m in range(1, 5))
    for entry in entries:
        f, m = entry.function, entry.degree
        for trial in range(min(config.TRIALS, EULER_POINTS)):
            a, b = _remainder_pair(entry, trial_rng(config.SEED, trial))
            for step in remainder_ratios(f, a, b, m, REMAINDER_STEPS):
                if step.ratio is None:
                    continue
                tracker.record(
                    max(step.ratio - remainder_bound(m), 0.0),
                    lambda: f"seed {config.SEED + trial}: {f.name} t={step.t} ratio={step.ratio:.6f}",
                )
    return tracker.result()


def proof_suite(config: TaylorConfig) -> SuiteResult:
    """
    Intermediate forms of the argument: the binomial form equals the standard polynomial, the
    form collected in powers of b equals the collapsed one, and every lower tensor is recovered
    from the top one by contraction with a.
    """
    tracker = SuiteTracker("proof", config.TOL)
    for entry in theorem_catalog(config.SEED):
        f, m = entry.function, entry.degree
        for trial in range(min(config.TRIALS, EULER_POINTS)):
            a, b = sample_pair(f, trial_rng(config.SEED, trial), entry.dim, config.SEGMENT_SAMPLES)
            tensors = derivative_tensors(f, a, m)
            report = build_report(f, a, b, m, ReportMode.THEOREM, config.SEGMENT_SAMPLES)
            scale = _identity_scale(report.f_a, report.f_b)
            detail = lambda: f"seed {config.SEED + trial}: {f.name} a={_fmt(a)} b={_fmt(b)}"  # noqa: E731
            binomial = taylor_binomial_form(f, a, b, m, tensors[m])
            collected = taylor_collected_form(f, a, b, m, tensors[m])
            tracker.record(abs(binomial - report.taylor_standard) / scale, detail)
            tracker.record(abs(collected - report.taylor_collapsed) / scale, detail)
            for k in range(m):
                tracker.record(relative_residual(lower_from_top(f, a, m, k), tensors[k]), detail, config.EULER_TOL)
    return tracker.result()


def risk_suite(config: TaylorConfig) -> SuiteResult:
    """
    Full allocation, homogeneity of capital and the exact quadratic identity on random
    portfolios, plus the two-risk worked instance.
    """
    tracker = SuiteTracker("risk", ALLOCATION_TOL)
    worked = Portfolio(np.array([1.0, 1.0]), np.array([[1.0, 0.5], [0.5, 1.0]]))
    worked_gap = abs(aggregate_capital(worked) - math.sqrt(3.0))
    tracker.record(worked_gap, lambda: "worked instance R=[[1,0.5],[0.5,1]] x=(1,1)", 1e-9)

    for trial in range(config.TRIALS):
        rng = trial_rng(config.SEED, trial)
        portfolio = random_portfolio(rng, int(rng.integers(1, 9)))
        detail = lambda: f"seed {config.SEED + trial}: exposures={_fmt(portfolio.exposures)}"  # noqa: E731
        tracker.record(allocation_report(portfolio).check_sum_gap, detail)

        scale = float(rng.uniform(0.1, 10.0))
        capital = aggregate_capital(portfolio)
        tracker.record(abs(aggregate_capital(portfolio.scaled(scale)) - scale * capital) / (scale * capital), detail)

        target = rng.uniform(0.5, 2.0, size=portfolio.dim)
        identity = capital_quadratic_identity(portfolio, target, config.SEGMENT_SAMPLES)
        tracker.record(identity.gap / (1.0 + identity.rhs), detail, RISK_IDENTITY_TOL)
    return tracker.result()


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "central": central_suite,
    "corollary": corollary_suite,
    "euler": euler_suite,
    "homogeneity": homogeneity_suite,
    "fd": fd_suite,
    "binomial": binomial_suite,
    "polynomial": polynomial_suite,
    "remainder": remainder_suite,
    "proof": proof_suite,
    "risk": risk_suite,
}


def run_suites(names: List[str], config: TaylorConfig, max_m: int = 12) -> List[SuiteResult]:
    """
    Run the named suites in order.

    :param names: suite names, or ["all"]
    :param config: tolerances, trial count and seed
    :param max_m: highest order for the binomial suite

    :return: List[SuiteResult] = one result per suite
    """
    selected = list(SUITES) if "all" in names else names
    results = []
    for name in selected:
        logger.info(f"Running suite {name} with {config.TRIALS} trials, seed {config.SEED}")
        if name == "binomial":
            results.append(binomial_suite(config, max_m))
        else:
            results.append(SUITES[name](config))
    return results
