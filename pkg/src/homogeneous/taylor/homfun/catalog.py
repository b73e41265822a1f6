#  Copyright 2026 homogeneous-taylor contributors.
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..jetdiff import Jet, Scalar, integer_power, jet_variable
from ..utils import DomainError, NotPositiveDefiniteError, ShapeError, SpecError
from .function_spec import FunctionSpec

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence[Scalar]], Scalar]
DomainPredicate = Callable[[Sequence[float]], bool]


@dataclass(frozen=True)
class HomogeneousFunction:
    """
    A positively homogeneous function f(lambda x) = lambda^degree f(x) together with the open
    cone on which it is smooth. ``evaluator`` only uses +, *, ** and so accepts floats or jets.
    ``dim`` is None for families defined in every dimension.
    """

    name: str
    degree: float
    dim: Optional[int]
    evaluator: Evaluator
    domain_predicate: DomainPredicate
    spec: FunctionSpec

    @property
    def integer_degree(self) -> Optional[int]:
        return int(self.degree) if float(self.degree).is_integer() else None

    def __call__(self, x: Sequence[float]) -> float:
        return evaluate(self, x)


def _power(base: Scalar, exponent: float) -> Scalar:
    if float(exponent).is_integer() and exponent >= 0:
        return integer_power(base, int(exponent))
    return base**exponent


def _quadratic_root(spec: FunctionSpec) -> HomogeneousFunction:
    if spec.R is None:
        raise SpecError("quadratic_root needs a matrix R")
    matrix = np.asarray(spec.R, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise SpecError(f"R must be a non-empty square matrix, got shape {matrix.shape}")
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
        raise NotPositiveDefiniteError("R must be symmetric")
    smallest = float(np.linalg.eigvalsh(matrix)[0])
    if not smallest > 0.0:
        raise NotPositiveDefiniteError(f"R must be positive definite, smallest eigenvalue is {smallest:.3e}")
    dim = matrix.shape[0]
    rows = matrix.tolist()

    def evaluator(x: Sequence[Scalar]) -> Scalar:
        quadratic = sum(x[i] * sum(rows[i][j] * x[j] for j in range(dim)) for i in range(dim))
        return quadratic**0.5

    def in_domain(x: Sequence[float]) -> bool:
        return len(x) == dim and any(value != 0.0 for value in x)

    name = "euclidean" if np.array_equal(matrix, np.eye(dim)) else "quadratic_root"
    return HomogeneousFunction(f"{name}(n={dim})", 1.0, dim, evaluator, in_domain, spec)


def _monomial(spec: FunctionSpec) -> HomogeneousFunction:
    if not spec.alpha:
        raise SpecError("monomial needs a non-empty exponent vector alpha")
    alpha = [float(a) for a in spec.alpha]
    if any(a < 0.0 or not math.isfinite(a) for a in alpha):
        raise SpecError(f"Monomial exponents must be finite and non-negative, got {alpha}")
    if sum(alpha) == 0.0:
        raise SpecError("Monomial degree must be positive, all exponents are zero")
    dim = len(alpha)
    positive_only = any(not a.is_integer() for a in alpha)

    def evaluator(x: Sequence[Scalar]) -> Scalar:
        result: Scalar = 1.0
        for value, exponent in zip(x, alpha):
            result = result * _power(value, exponent)
        return result

    def in_domain(x: Sequence[float]) -> bool:
        if len(x) != dim:
            return False
        return all(value > 0.0 for value in x) if positive_only else all(math.isfinite(value) for value in x)

    exponents = ",".join(f"{a:g}" for a in alpha)
    return HomogeneousFunction(f"monomial(alpha={exponents})", sum(alpha), dim, evaluator, in_domain, spec)


def _pnorm(spec: FunctionSpec) -> HomogeneousFunction:
    if spec.p is None or not spec.p > 1.0:
        raise SpecError(f"pnorm needs p > 1, got {spec.p}")
    p = float(spec.p)

    def evaluator(x: Sequence[Scalar]) -> Scalar:
        return sum(_power(value, p) for value in x) ** (1.0 / p)

    def in_domain(x: Sequence[float]) -> bool:
        return len(x) > 0 and all(value > 0.0 for value in x)

    return HomogeneousFunction(f"pnorm(p={p:g})", 1.0, None, evaluator, in_domain, spec)


def _power_of(spec: FunctionSpec) -> HomogeneousFunction:
    if spec.inner is None or spec.power is None:
        raise SpecError("power needs an inner function spec and an integer power")
    if spec.power < 1:
        raise SpecError(f"power must be at least 1, got {spec.power}")
    inner = make_function(spec.inner)
    if inner.degree != 1.0:
        raise SpecError(f"power needs an inner function of degree 1, {inner.name} has degree {inner.degree:g}")
    power = spec.power

    def evaluator(x: Sequence[Scalar]) -> Scalar:
        return integer_power(inner.evaluator(x), power)

    name = f"power({inner.name}, {power})"
    return HomogeneousFunction(name, float(power), inner.dim, evaluator, inner.domain_predicate, spec)


def make_function(spec: FunctionSpec) -> HomogeneousFunction:
    """
    Build the catalog function described by ``spec``.

    :param spec: function specification

    :return: HomogeneousFunction = evaluator, degree and smooth domain of the function
    """
    builders = {"quadratic_root": _quadratic_root, "monomial": _monomial, "pnorm": _pnorm, "power": _power_of}
    function = builders[spec.family](spec)
    logger.debug(f"Built {function.name} of degree {function.degree:g}")
    return function


def power_function(f: HomogeneousFunction, m: int) -> HomogeneousFunction:
    """
    f^m for a degree-1 function f.
    """
    return make_function(FunctionSpec("power", power=m, inner=f.spec))


def _check_point(f: HomogeneousFunction, x: Sequence[float]) -> list:
    point = [float(value) for value in np.asarray(x, dtype=np.float64).reshape(-1)]
    if f.dim is not None and len(point) != f.dim:
        raise ShapeError(f"{f.name} takes {f.dim} coordinates, got {len(point)}")
    if not f.domain_predicate(point):
        raise DomainError(f"Point {point} is outside the smooth domain of {f.name}")
    return point


def evaluate(f: HomogeneousFunction, x: Sequence[float]) -> float:
    """
    Evaluate ``f`` at a point of its smooth domain.

    :param f: catalog function
    :param x: point

    :return: float = f(x)
    """
    return float(f.evaluator(_check_point(f, x)))


def function_jet(f: HomogeneousFunction, a: Sequence[float], m: int) -> Jet:
    """
    Run the evaluator on the coordinate jets a_i + t_i, giving the degree-m jet of f at a.

    :param f: catalog function
    :param a: expansion point in the domain
    :param m: truncation degree

    :return: Jet = truncated Taylor series of f around a
    """
    point = _check_point(f, a)
    result = f.evaluator(jet_variable(point, m))
    if not isinstance(result, Jet):
        return Jet.constant(float(result), len(point), m)
    return result


def homogeneity_residual(f: HomogeneousFunction, x: Sequence[float], scale: float) -> float:
    """
    |f(lambda x) - lambda^m f(x)| for lambda > 0.

    :param f: catalog function
    :param x: point in the domain
    :param scale: lambda

    :return: float = the absolute residual
    """
    if not scale > 0.0:
        raise DomainError(f"Homogeneity needs a positive scale, got {scale}")
    point = np.asarray(x, dtype=np.float64)
    return abs(evaluate(f, scale * point) - scale**f.degree * evaluate(f, point))


def segment_in_domain(f: HomogeneousFunction, a: Sequence[float], b: Sequence[float], samples: int = 101) -> bool:
    """
    Check the domain predicate at ``samples`` equally spaced points of [a, b], endpoints included.
    Sampling can miss a boundary crossing between two samples.

    :return: bool = True when every sample is inside the domain
    """
    start = np.asarray(a, dtype=np.float64).reshape(-1)
    end = np.asarray(b, dtype=np.float64).reshape(-1)
    if start.size != end.size:
        return False
    for s in np.linspace(0.0, 1.0, max(int(samples), 2)):
        if not f.domain_predicate((start + s * (end - start)).tolist()):
            return False
    return True
