#  Copyright 2026 homogeneous-taylor contributors.
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..homfun import segment_in_domain
from ..polynomial import taylor_power_collapsed
from ..utils import DomainError
from .portfolio import Portfolio

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AllocationReport:
    capital: float
    allocations: List[float]
    check_sum_gap: float
    labels: Optional[List[str]] = None

    def to_json(self) -> Dict[str, Any]:
        return {"capital": self.capital, "allocations": self.allocations, "check_sum_gap": self.check_sum_gap}


@dataclass(frozen=True)
class QuadraticIdentityReport:
    lhs: float
    rhs: float
    gap: float

    def to_json(self) -> Dict[str, Any]:
        return {"lhs": self.lhs, "rhs": self.rhs, "gap": self.gap}


def aggregate_capital(p: Portfolio) -> float:
    """
    Aggregated capital sqrt(x^T R x).

    :param p: portfolio with nonzero exposures

    :return: float = the aggregated capital
    """
    if not np.any(p.exposures != 0.0):
        raise DomainError("Aggregation is not smooth at zero exposures")
    return float(np.sqrt(np.dot(p.exposures, p.matrix @ p.exposures)))


def euler_allocation(p: Portfolio) -> np.ndarray:
    """
    Euler allocation x_i (R x)_i / sqrt(x^T R x); by Euler's theorem for degree 1 the parts add
    up to the aggregated capital.

    :param p: portfolio with positive capital

    :return: np.ndarray = per-risk capital contributions
    """
    capital = aggregate_capital(p)
    if not capital > 0.0:
        raise DomainError("Cannot allocate zero capital")
    return p.exposures * (p.matrix @ p.exposures) / capital


def allocation_report(p: Portfolio) -> AllocationReport:
    """
    Capital, allocations and the relative gap |sum(allocations) - capital| / capital.
    """
    capital = aggregate_capital(p)
    allocations = euler_allocation(p)
    gap = abs(float(np.sum(allocations)) - capital) / capital
    logger.info(f"Allocated capital {capital:.9g} over {p.dim} risks, sum gap {gap:.3e}")
    return AllocationReport(capital, allocations.tolist(), gap, p.labels)


def capital_quadratic_identity(p: Portfolio, target: Sequence[float], samples: int = 101) -> QuadraticIdentityReport:
    """
    Collapsed second order Taylor polynomial of the squared capital, expanded at the current
    exposures and evaluated at ``target``, against b^T R b.

    :param p: portfolio, its exposures are the expansion point
    :param target: exposures to evaluate at
    :param samples: samples for the segment check

    :return: QuadraticIdentityReport = lhs, rhs and their absolute gap
    """
    f = p.aggregation_function()
    b = np.asarray(target, dtype=np.float64).reshape(-1)
    if not segment_in_domain(f, p.exposures, b, samples):
        raise DomainError(f"Segment from {p.exposures.tolist()} to {b.tolist()} passes through zero exposure")
    lhs = taylor_power_collapsed(f, p.exposures, b, 2)
    rhs = float(b @ p.matrix @ b)
    return QuadraticIdentityReport(lhs, rhs, abs(lhs - rhs))
