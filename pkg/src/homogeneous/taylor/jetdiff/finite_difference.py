#  Copyright 2026 homogeneous-taylor contributors.
import logging
from itertools import product
from typing import TYPE_CHECKING, Dict, Optional, Sequence, Tuple

import numpy as np

from ..symtensor import MultiIndex, SymmetricTensor
from ..utils import MAX_FD_ORDER, DomainError, SizeGuardError

if TYPE_CHECKING:
    from ..homfun import HomogeneousFunction

logger = logging.getLogger(__name__)

# second order accurate central stencils, offset (in steps) -> weight, for derivative orders 0..4
CENTRAL_STENCILS: Tuple[Dict[int, float], ...] = (
    {0: 1.0},
    {-1: -0.5, 1: 0.5},
    {-1: 1.0, 0: -2.0, 1: 1.0},
    {-2: -0.5, -1: 1.0, 1: -1.0, 2: 0.5},
    {-2: 1.0, -1: -4.0, 0: 6.0, 1: -4.0, 2: 1.0},
)


def auto_step(a: Sequence[float], k: int) -> float:
    """
    eps^(1/(k+2)) * (1 + ||a||_inf), balancing O(h^2) truncation against eps/h^k rounding.
    """
    return float(np.finfo(np.float64).eps ** (1.0 / (k + 2)) * (1.0 + np.max(np.abs(a))))


def fd_tensor(f: "HomogeneousFunction", a: Sequence[float], k: int, h: Optional[float] = None) -> SymmetricTensor:
    """
    Estimate the order-k derivative tensor of ``f`` at ``a`` with nested central differences.
    Each multiset uses the tensor product of the one-dimensional stencils for its exponent;
    function values are cached by stencil offset so multisets sharing points reuse them.

    :param f: function to differentiate
    :param a: interior point of the smooth domain
    :param k: derivative order, at most 4
    :param h: step size, chosen by auto_step when omitted

    :return: SymmetricTensor = the finite difference estimate
    """
    if k < 0 or k > MAX_FD_ORDER:
        raise SizeGuardError(f"Finite difference oracle supports orders 0..{MAX_FD_ORDER}, got {k}")
    point = np.asarray(a, dtype=np.float64).reshape(-1)
    step = auto_step(point, k) if h is None else float(h)
    cache: Dict[Tuple[int, ...], float] = {}

    def value_at(offsets: Tuple[int, ...]) -> float:
        if offsets not in cache:
            x = point + step * np.asarray(offsets, dtype=np.float64)
            if not f.domain_predicate(x):
                raise DomainError(f"Finite difference stencil point {x.tolist()} leaves the domain of {f.name}")
            cache[offsets] = float(f.evaluator(x.tolist()))
        return cache[offsets]

    def entry(indices: Tuple[int, ...]) -> float:
        exponent = MultiIndex(indices, point.size).exponent()
        stencils = [CENTRAL_STENCILS[power].items() for power in exponent]
        total = 0.0
        for terms in product(*stencils):
            weight = float(np.prod([w for _, w in terms]))
            total += weight * value_at(tuple(offset for offset, _ in terms))
        return total / step**k

    tensor = SymmetricTensor.from_function(k, point.size, entry)
    logger.debug(f"Finite difference order {k} tensor of {f.name} used {len(cache)} evaluations with h={step:.3e}")
    return tensor
