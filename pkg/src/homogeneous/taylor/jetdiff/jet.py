#  Copyright 2026 homogeneous-taylor contributors.
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from numbers import Real
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from ..symtensor import MultiIndex, SymmetricTensor, multisets, storage_size
from ..symtensor.multi_index import check_guards
from ..utils import DomainError, ShapeError

logger = logging.getLogger(__name__)

Scalar = Union[float, "Jet"]


@lru_cache(maxsize=None)
def jet_exponents(dim: int, max_degree: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Storage order of jet coefficients: grouped by total degree 0..m, and inside each degree in
    the lexicographic order of the matching sorted multi-indices, so the degree-k block lines up
    with the storage of an order-k SymmetricTensor.

    :param dim: number of variables n
    :param max_degree: truncation degree m

    :return: Tuple of the C(n+m, m) exponent vectors
    """
    check_guards(dim, max_degree)
    return tuple(
        MultiIndex(indices, dim).exponent() for degree in range(max_degree + 1) for indices in multisets(dim, degree)
    )


@lru_cache(maxsize=None)
def _degree_offsets(dim: int, max_degree: int) -> Tuple[int, ...]:
    offsets = [0]
    for degree in range(max_degree + 1):
        offsets.append(offsets[-1] + storage_size(dim, degree))
    return tuple(offsets)


@lru_cache(maxsize=None)
def _product_plan(dim: int, max_degree: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    # all (i, j) with |alpha_i| + |alpha_j| <= m, and the slot of alpha_i + alpha_j
    exponents = jet_exponents(dim, max_degree)
    slots: Dict[Tuple[int, ...], int] = {exponent: slot for slot, exponent in enumerate(exponents)}
    lefts, rights, targets = [], [], []
    for i, left in enumerate(exponents):
        for j, right in enumerate(exponents):
            if sum(left) + sum(right) > max_degree:
                continue
            lefts.append(i)
            rights.append(j)
            targets.append(slots[tuple(a + b for a, b in zip(left, right))])
    logger.debug(f"Built jet product plan for n={dim}, m={max_degree} with {len(targets)} terms")
    return np.array(lefts, dtype=np.intp), np.array(rights, dtype=np.intp), np.array(targets, dtype=np.intp)


@lru_cache(maxsize=None)
def _exponent_factorials(dim: int, order: int) -> np.ndarray:
    return np.array([MultiIndex(indices, dim).exponent_factorial() for indices in multisets(dim, order)], dtype=np.float64)


@dataclass(frozen=True, eq=False)
class Jet:
    """
    Truncated multivariate power series c_alpha t^alpha, |alpha| <= m, of a function around a
    point. Supports the arithmetic the function catalog needs, so evaluators written for floats
    run unchanged on jets.
    """

    dim: int
    max_degree: int
    coeffs: np.ndarray

    # make numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        check_guards(self.dim, self.max_degree)
        coeffs = np.array(self.coeffs, dtype=np.float64).reshape(-1)
        expected = math.comb(self.dim + self.max_degree, self.max_degree)
        if coeffs.size != expected:
            raise ShapeError(f"Jet with n={self.dim}, m={self.max_degree} needs {expected} coefficients, got {coeffs.size}")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, value: float, dim: int, max_degree: int) -> "Jet":
        coeffs = np.zeros(math.comb(dim + max_degree, max_degree))
        coeffs[0] = value
        return cls(dim, max_degree, coeffs)

    @property
    def value(self) -> float:
        return float(self.coeffs[0])

    def coefficient(self, exponent: Sequence[int]) -> float:
        """
        The coefficient c_alpha of t^alpha.
        """
        if len(exponent) != self.dim:
            raise ShapeError(f"Exponent {tuple(exponent)} does not match jet dimension {self.dim}")
        if sum(exponent) > self.max_degree:
            return 0.0
        index = MultiIndex.from_exponent(exponent)
        offset = _degree_offsets(self.dim, self.max_degree)[index.order]
        return float(self.coeffs[offset + index.position()])

    def __add__(self, other: Scalar) -> "Jet":
        return jet_arith("add", self, other)

    def __radd__(self, other: float) -> "Jet":
        return jet_arith("add", self, other)

    def __sub__(self, other: Scalar) -> "Jet":
        return jet_arith("sub", self, other)

    def __rsub__(self, other: float) -> "Jet":
        return jet_arith("add", jet_arith("scale", self, -1.0), other)

    def __mul__(self, other: Scalar) -> "Jet":
        return jet_arith("mul", self, other)

    def __rmul__(self, other: float) -> "Jet":
        return jet_arith("mul", self, other)

    def __neg__(self) -> "Jet":
        return jet_arith("scale", self, -1.0)

    def __truediv__(self, other: float) -> "Jet":
        if isinstance(other, Jet):
            return jet_arith("mul", self, jet_compose_binomial(other, -1.0))
        return jet_arith("scale", self, 1.0 / other)

    def __pow__(self, exponent: float) -> "Jet":
        if float(exponent).is_integer() and exponent >= 0:
            result = integer_power(self, int(exponent))
            return result if isinstance(result, Jet) else Jet.constant(result, self.dim, self.max_degree)
        return jet_compose_binomial(self, float(exponent))

    def __repr__(self) -> str:
        return f"Jet(dim={self.dim}, max_degree={self.max_degree}, coeffs={self.coeffs.tolist()})"


def jet_variable(a: Sequence[float], m: int) -> List[Jet]:
    """
    Seed the coordinate jets x_i = a_i + t_i.

    :param a: expansion point
    :param m: truncation degree

    :return: List[Jet] = one jet per coordinate
    """
    point = np.asarray(a, dtype=np.float64).reshape(-1)
    dim = point.size
    check_guards(dim, m)
    size = math.comb(dim + m, m)
    variables = []
    for i in range(dim):
        coeffs = np.zeros(size)
        coeffs[0] = point[i]
        if m >= 1:
            coeffs[1 + i] = 1.0
        variables.append(Jet(dim, m, coeffs))
    return variables


def jet_arith(op: str, x: Jet, y: Scalar) -> Jet:
    """
    Coefficient-wise add, sub and scale; mul is the Cauchy product truncated at degree m.
    A real ``y`` is treated as a constant jet.

    :param op: one of add, sub, mul, scale
    :param x: left operand
    :param y: right operand, a jet of the same shape or a real number

    :return: Jet = the result
    """
    if isinstance(y, Jet):
        if y.dim != x.dim or y.max_degree != x.max_degree:
            raise ShapeError(f"Jet shapes differ: n={x.dim}, m={x.max_degree} vs n={y.dim}, m={y.max_degree}")
        if op == "add":
            return Jet(x.dim, x.max_degree, x.coeffs + y.coeffs)
        if op == "sub":
            return Jet(x.dim, x.max_degree, x.coeffs - y.coeffs)
        if op == "mul":
            lefts, rights, targets = _product_plan(x.dim, x.max_degree)
            result = np.zeros(x.coeffs.size)
            np.add.at(result, targets, x.coeffs[lefts] * y.coeffs[rights])
            return Jet(x.dim, x.max_degree, result)
        if op == "scale":
            raise ShapeError("scale needs a real factor, not a jet")
    elif isinstance(y, Real):
        value = float(y)
        if op in ("add", "sub"):
            coeffs = x.coeffs.copy()
            coeffs[0] += value if op == "add" else -value
            return Jet(x.dim, x.max_degree, coeffs)
        if op in ("mul", "scale"):
            return Jet(x.dim, x.max_degree, x.coeffs * value)
    else:
        return NotImplemented
    raise ValueError(f"Unknown jet operation '{op}'")


def integer_power(base: Scalar, exponent: int) -> Scalar:
    """
    Square-and-multiply power shared by floats and jets, so both follow the same rounding path.
    """
    if exponent < 0:
        raise ValueError(f"Integer power needs a non-negative exponent, got {exponent}")
    result: Scalar = 1.0
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def generalized_binomial(p: float, j: int) -> float:
    """
    C(p, j) = p (p-1) ... (p-j+1) / j!, exact for non-negative integer p.
    """
    if float(p).is_integer() and p >= 0:
        return float(math.comb(int(p), j))
    numerator = 1.0
    for i in range(j):
        numerator *= p - i
    return numerator / math.factorial(j)


def jet_compose_binomial(u: Jet, p: float) -> Jet:
    """
    u^p truncated at degree m, as u_0^p * sum_j C(p, j) w^j with w = u / u_0 - 1. The series in w
    is summed by Horner's rule; w has no constant term so powers above m vanish.

    :param u: jet with a positive constant term
    :param p: real exponent

    :return: Jet = the truncated power
    """
    u0 = u.value
    if not u0 > 0.0:
        raise DomainError(f"Real power {p} of a jet needs a positive constant term, got {u0}")
    w_coeffs = u.coeffs / u0
    w_coeffs[0] = 0.0
    w = Jet(u.dim, u.max_degree, w_coeffs)
    result = Jet.constant(generalized_binomial(p, u.max_degree), u.dim, u.max_degree)
    for j in range(u.max_degree - 1, -1, -1):
        result = result * w + generalized_binomial(p, j)
    return result * (u0**p)


def extract_tensor(j: Jet, k: int) -> SymmetricTensor:
    """
    The order-k derivative tensor at the expansion point, D^alpha f(a) = alpha! c_alpha.

    :param j: jet of f at a
    :param k: derivative order, at most j.max_degree

    :return: SymmetricTensor = the k-th derivatives of f at a
    """
    if k < 0 or k > j.max_degree:
        raise ShapeError(f"Cannot extract order {k} derivatives from a jet of degree {j.max_degree}")
    offsets = _degree_offsets(j.dim, j.max_degree)
    block = j.coeffs[offsets[k] : offsets[k + 1]]
    return SymmetricTensor(k, j.dim, block * _exponent_factorials(j.dim, k))

