#  Copyright 2026 homogeneous-taylor contributors.
import math
from typing import List

from ..utils import MAX_BINOMIAL_ORDER, SizeGuardError


def alternating_binomial_sum(m: int, q: int) -> int:
    """
    sum_{k=q}^{m} (-1)^(k-q) C(m, k) C(k, k-q), in exact integers. It equals C(m, r) (1-1)^r with
    r = m - q, so it is 1 for q = m and 0 for every q < m.

    :param m: order, 0..20
    :param q: power of b collected, 0..m

    :return: int = the exact sum
    """
    if m < 0 or m > MAX_BINOMIAL_ORDER:
        raise SizeGuardError(f"Binomial identity order {m} outside 0..{MAX_BINOMIAL_ORDER}")
    if q < 0 or q > m:
        raise SizeGuardError(f"Collected power {q} outside 0..{m}")
    return sum((-1) ** (k - q) * math.comb(m, k) * math.comb(k, k - q) for k in range(q, m + 1))


def binomial_table(max_m: int) -> List[List[int]]:
    """
    Rows m = 0..max_m of alternating_binomial_sum(m, q) for q = 0..m.
    """
    if max_m < 0 or max_m > MAX_BINOMIAL_ORDER:
        raise SizeGuardError(f"Binomial table order {max_m} outside 0..{MAX_BINOMIAL_ORDER}")
    return [[alternating_binomial_sum(m, q) for q in range(m + 1)] for m in range(max_m + 1)]


def is_kronecker_table(table: List[List[int]]) -> bool:
    return all(value == (1 if q == m else 0) for m, row in enumerate(table) for q, value in enumerate(row))
