#  Copyright 2026 homogeneous-taylor contributors.
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Tuple

from ..utils import MAX_DIM, MAX_ORDER, ShapeError, SizeGuardError


def check_guards(dim: int, order: int) -> None:
    """
    Reject shapes the dense multiset storage is not meant for.

    :param dim: number of coordinates n
    :param order: tensor order k

    :return: None
    """
    if dim < 1 or dim > MAX_DIM:
        raise SizeGuardError(f"Dimension {dim} outside supported range 1..{MAX_DIM}")
    if order < 0 or order > MAX_ORDER:
        raise SizeGuardError(f"Order {order} outside supported range 0..{MAX_ORDER}")


@lru_cache(maxsize=None)
def multisets(dim: int, order: int) -> Tuple[Tuple[int, ...], ...]:
    """
    All non-decreasing index tuples of length ``order`` over ``range(dim)`` in lexicographic order.
    This is the canonical storage order of a SymmetricTensor.

    :param dim: number of coordinates n
    :param order: tensor order k

    :return: Tuple of the C(n+k-1, k) sorted multi-indices
    """
    check_guards(dim, order)
    return tuple(combinations_with_replacement(range(dim), order))


@lru_cache(maxsize=None)
def multiset_positions(dim: int, order: int) -> Dict[Tuple[int, ...], int]:
    return {indices: position for position, indices in enumerate(multisets(dim, order))}


def storage_size(dim: int, order: int) -> int:
    return math.comb(dim + order - 1, order)


@dataclass(frozen=True)
class MultiIndex:
    """
    A multiset of coordinate directions, stored as a sorted tuple of 0-based indices.
    """

    indices: Tuple[int, ...]
    dim: int

    def __post_init__(self) -> None:
        if any(i < 0 or i >= self.dim for i in self.indices):
            raise ShapeError(f"Index {self.indices} out of range for dimension {self.dim}")
        if any(a > b for a, b in zip(self.indices, self.indices[1:])):
            raise ShapeError(f"Multi-index {self.indices} is not sorted")

    @classmethod
    def of(cls, indices: Iterable[int], dim: int) -> "MultiIndex":
        """
        Build the multi-index of an index tuple given in any order.
        """
        return cls(tuple(sorted(int(i) for i in indices)), dim)

    @classmethod
    def from_exponent(cls, exponent: Iterable[int]) -> "MultiIndex":
        exponent = tuple(exponent)
        indices = tuple(i for i, power in enumerate(exponent) for _ in range(power))
        return cls(indices, len(exponent))

    @property
    def order(self) -> int:
        return len(self.indices)

    def exponent(self) -> Tuple[int, ...]:
        """
        The exponent vector alpha with alpha_i = number of times i occurs.
        """
        counts = Counter(self.indices)
        return tuple(counts.get(i, 0) for i in range(self.dim))

    def exponent_factorial(self) -> int:
        """
        alpha! = prod_i alpha_i!, exact.
        """
        return math.prod(math.factorial(power) for power in self.exponent())

    def multiplicity(self) -> int:
        """
        Number of distinct orderings of the multiset, k! / alpha!.
        """
        return math.factorial(self.order) // self.exponent_factorial()

    def position(self) -> int:
        return multiset_positions(self.dim, self.order)[self.indices]
