#  Copyright 2026 homogeneous-taylor contributors.
import json
import logging
import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence

import numpy as np

from ..homfun import HomogeneousFunction, evaluate, power_function, segment_in_domain
from ..symtensor import apply_uniform
from ..utils import DegreeMismatchError, DomainError
from .euler_chain import euler_chain_residual
from .taylor_forms import derivative_tensors, standard_from_tensors

logger = logging.getLogger(__name__)


class ReportMode(str, Enum):
    """
    theorem expands f itself, corollary expands f^m for a degree-1 f.
    """

    THEOREM = "theorem"
    COROLLARY = "corollary"


@dataclass(frozen=True)
class TaylorReport:
    f_a: float
    f_b: float
    taylor_standard: float
    taylor_collapsed: float
    identity_gap: float
    remainder: float
    euler_residuals: List[float]
    order: int
    mode: str

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def build_report(
    f: HomogeneousFunction,
    a: Sequence[float],
    b: Sequence[float],
    m: int,
    mode: ReportMode = ReportMode.THEOREM,
    samples: int = 101,
) -> TaylorReport:
    """
    Compare the standard and collapsed Taylor polynomials of one function from a to b.

    :param f: catalog function, of degree m in theorem mode and degree 1 in corollary mode
    :param a: expansion point
    :param b: evaluation point, joined to a by a segment inside the domain
    :param m: Taylor order
    :param mode: theorem or corollary
    :param samples: number of samples for the segment check

    :return: TaylorReport = values, gap, remainder and Euler chain residuals of the expanded function
    """
    mode = ReportMode(mode)
    if mode is ReportMode.COROLLARY:
        if f.degree != 1.0:
            raise DegreeMismatchError(f"Corollary mode needs a degree-1 function, {f.name} has degree {f.degree:g}")
        expanded = power_function(f, m)
    else:
        expanded = f
    if expanded.integer_degree != m:
        raise DegreeMismatchError(f"{expanded.name} has degree {expanded.degree:g}, the report needs degree {m}")

    start = np.asarray(a, dtype=np.float64).reshape(-1)
    end = np.asarray(b, dtype=np.float64).reshape(-1)
    if not segment_in_domain(expanded, start, end, samples):
        raise DomainError(f"Segment from {start.tolist()} to {end.tolist()} leaves the domain of {expanded.name}")

    tensors = derivative_tensors(expanded, start, m)
    f_b = evaluate(expanded, end)
    standard = standard_from_tensors(tensors, start, end)
    collapsed = apply_uniform(tensors[m], end) / math.factorial(m)
    residuals = [euler_chain_residual(expanded, start, m, k, tensors) for k in range(1, m + 1)]

    report = TaylorReport(
        f_a=float(tensors[0].coeffs[0]),
        f_b=f_b,
        taylor_standard=standard,
        taylor_collapsed=collapsed,
        identity_gap=abs(standard - collapsed),
        remainder=f_b - standard,
        euler_residuals=residuals,
        order=m,
        mode=mode.value,
    )
    logger.info(f"{expanded.name} order {m}: gap {report.identity_gap:.3e}, remainder {report.remainder:.3e}")
    return report
