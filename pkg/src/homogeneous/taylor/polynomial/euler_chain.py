#  Copyright 2026 homogeneous-taylor contributors.
from typing import Optional, Sequence

import numpy as np

from ..homfun import HomogeneousFunction
from ..symtensor import SymmetricTensor, contract, relative_residual
from ..utils import MAX_ORDER, DegreeMismatchError, SizeGuardError
from .taylor_forms import derivative_tensors


def euler_chain_residual(
    f: HomogeneousFunction,
    a: Sequence[float],
    m: int,
    k: int,
    tensors: Optional[Sequence[SymmetricTensor]] = None,
) -> float:
    """
    Relative residual of Euler's relation D_{mu_1...mu_k} f(a) a^{mu_k} = (m - k + 1) D_{mu_1...mu_{k-1}} f(a),
    which holds because D_{k-1} f is homogeneous of degree m - k + 1. Levels k > m are allowed and
    compare against the zero tensor.

    :param f: catalog function of degree m
    :param a: point in the domain
    :param m: degree
    :param k: level, 1..10
    :param tensors: derivative tensors at a of orders 0..k or more, computed when omitted

    :return: float = max coefficient difference over 1 + max |coefficient|
    """
    if f.integer_degree != m:
        raise DegreeMismatchError(f"{f.name} has degree {f.degree:g}, not {m}")
    if k < 1 or k > MAX_ORDER:
        raise SizeGuardError(f"Euler chain level {k} outside 1..{MAX_ORDER}")
    if tensors is None or len(tensors) <= k:
        tensors = derivative_tensors(f, a, max(m, k))
    point = np.asarray(a, dtype=np.float64)
    return relative_residual(contract(tensors[k], point), tensors[k - 1].scaled(m - k + 1))
