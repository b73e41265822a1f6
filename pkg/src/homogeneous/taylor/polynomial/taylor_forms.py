#  Copyright 2026 homogeneous-taylor contributors.
import logging
import math
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from ..homfun import HomogeneousFunction, evaluate, function_jet, power_function
from ..jetdiff import extract_tensor
from ..symtensor import SymmetricTensor, apply_uniform, contract_vectors
from ..utils import MAX_ORDER, DegreeMismatchError, DomainError, SizeGuardError
from .binomial import alternating_binomial_sum

logger = logging.getLogger(__name__)


def derivative_tensors(f: HomogeneousFunction, a: Sequence[float], m: int) -> List[SymmetricTensor]:
    """
    All derivative tensors D_{mu_1...mu_k} f(a) for k = 0..m, read off one degree-m jet of f at a.

    :param f: catalog function
    :param a: expansion point in the domain
    :param m: highest order, at most 10

    :return: List[SymmetricTensor] = tensors of orders 0..m
    """
    if m < 0 or m > MAX_ORDER:
        raise SizeGuardError(f"Derivative order {m} outside 0..{MAX_ORDER}")
    jet = function_jet(f, a, m)
    return [extract_tensor(jet, k) for k in range(m + 1)]


def _require_degree(f: HomogeneousFunction, m: int) -> None:
    if f.integer_degree != m:
        raise DegreeMismatchError(f"{f.name} has degree {f.degree:g}, the collapsed form needs degree {m}")


def _require_domain(f: HomogeneousFunction, x: Sequence[float]) -> np.ndarray:
    point = np.asarray(x, dtype=np.float64).reshape(-1)
    if not f.domain_predicate(point.tolist()):
        raise DomainError(f"Point {point.tolist()} is outside the smooth domain of {f.name}")
    return point


def standard_from_tensors(tensors: Sequence[SymmetricTensor], a: Sequence[float], b: Sequence[float]) -> float:
    """
    f(a) + sum_k (1/k!) d^k f(a; b - a) given the tensors of orders 0..m at a.
    """
    step = np.asarray(b, dtype=np.float64) - np.asarray(a, dtype=np.float64)
    total = float(tensors[0].coeffs[0])
    for k in range(1, len(tensors)):
        total += apply_uniform(tensors[k], step) / math.factorial(k)
    return total


def taylor_standard(f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int) -> float:
    """
    The order-m Taylor polynomial of f at a evaluated at b, T^(m) f(a; b - a).

    :param f: catalog function
    :param a: expansion point
    :param b: evaluation point
    :param m: order, at least 1

    :return: float = f(a) + sum_{k=1}^{m} (1/k!) d^k f(a; b - a)
    """
    if m < 1:
        raise SizeGuardError(f"Taylor order must be at least 1, got {m}")
    _require_domain(f, b)
    return standard_from_tensors(derivative_tensors(f, a, m), a, b)


def taylor_collapsed(f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int) -> float:
    """
    The collapsed form (1/m!) d^m f(a; b) for f homogeneous of degree m. The top tensor is
    contracted with b itself, not with b - a.

    :return: float = the collapsed Taylor polynomial
    """
    _require_degree(f, m)
    point = _require_domain(f, b)
    return apply_uniform(derivative_tensors(f, a, m)[m], point) / math.factorial(m)


def taylor_power_collapsed(f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int) -> float:
    """
    Collapsed Taylor polynomial of f^m for a degree-1 function f.

    :param f: degree-1 catalog function
    :param m: power and Taylor order, 1..10

    :return: float = (1/m!) d^m f^m (a; b)
    """
    if f.degree != 1.0:
        raise DegreeMismatchError(f"{f.name} has degree {f.degree:g}, powers need a degree-1 function")
    if m < 1 or m > MAX_ORDER:
        raise SizeGuardError(f"Power order {m} outside 1..{MAX_ORDER}")
    return taylor_collapsed(power_function(f, m), a, b, m)


def lower_from_top(f: HomogeneousFunction, a: Sequence[float], m: int, k: int) -> SymmetricTensor:
    """
    Rebuild D_k f(a) from the top tensor alone, (1/(m-k)!) D_m f(a) contracted with m-k copies of a,
    which holds for f homogeneous of degree m by repeated use of Euler's theorem.

    :param f: catalog function of degree m
    :param a: point in the domain
    :param m: degree
    :param k: order to rebuild, 0..m

    :return: SymmetricTensor = the reconstructed order-k tensor
    """
    _require_degree(f, m)
    if k < 0 or k > m:
        raise SizeGuardError(f"Order {k} outside 0..{m}")
    point = _require_domain(f, a)
    top = derivative_tensors(f, point, m)[m]
    return contract_vectors(top, [point] * (m - k)).scaled(1.0 / math.factorial(m - k))


def taylor_binomial_form(
    f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int, top: Optional[SymmetricTensor] = None
) -> float:
    """
    (1/m!) sum_k C(m, k) d^m f(a; (b-a)^k, a^(m-k)): every lower tensor replaced by the top one.
    """
    _require_degree(f, m)
    start = _require_domain(f, a)
    step = _require_domain(f, b) - start
    top = derivative_tensors(f, start, m)[m] if top is None else top
    total = 0.0
    for k in range(m + 1):
        total += math.comb(m, k) * apply_uniform_mixed(top, [step] * k + [start] * (m - k))
    return total / math.factorial(m)


def taylor_collected_form(
    f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int, top: Optional[SymmetricTensor] = None
) -> float:
    """
    (1/m!) sum_q w(m, q) d^m f(a; b^q, a^(m-q)) with the exact weights w = alternating_binomial_sum.
    """
    _require_degree(f, m)
    start = _require_domain(f, a)
    end = _require_domain(f, b)
    top = derivative_tensors(f, start, m)[m] if top is None else top
    total = 0.0
    for q in range(m + 1):
        weight = alternating_binomial_sum(m, q)
        if weight:
            total += weight * apply_uniform_mixed(top, [end] * q + [start] * (m - q))
    return total / math.factorial(m)


def apply_uniform_mixed(t: SymmetricTensor, vectors: Sequence[np.ndarray]) -> float:
    return float(contract_vectors(t, vectors).coeffs[0])


class RemainderStep(NamedTuple):
    t: float
    remainder: float
    half_remainder: float
    ratio: Optional[float]


def remainder_ratios(
    f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], m: int, steps: Sequence[float] = (0.1, 0.05, 0.025)
) -> List[RemainderStep]:
    """
    Remainders f(b_t) - T^(m) f(a; b_t - a) along b_t = a + t (b - a), for each t and t/2. The
    ratio |r(t/2)| / |r(t)| approaches 2^-(m+1); it is None when |r(t)| <= 1e-12.

    :return: List[RemainderStep] = one entry per step
    """
    start = _require_domain(f, a)
    direction = np.asarray(b, dtype=np.float64) - start
    tensors = derivative_tensors(f, start, m)

    def remainder(t: float) -> float:
        target = start + t * direction
        return evaluate(f, target) - standard_from_tensors(tensors, start, target)

    results = []
    for t in steps:
        full, half = remainder(t), remainder(t / 2.0)
        ratio = abs(half) / abs(full) if abs(full) > 1e-12 else None
        results.append(RemainderStep(float(t), full, half, ratio))
    return results
