#  Copyright 2026 homogeneous-taylor contributors.
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from ..utils import ShapeError
from .multi_index import MultiIndex, check_guards, multiset_positions, multisets, storage_size


Vector = Union[Sequence[float], np.ndarray]


@dataclass(frozen=True, eq=False)
class SymmetricTensor:
    """
    A fully symmetric tensor of order k in n dimensions. One real value is stored per sorted
    multi-index, in lexicographic order, so symmetry holds by construction. The stored value is
    the tensor entry itself, not weighted by the number of orderings of the index.
    """

    order: int
    dim: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        check_guards(self.dim, self.order)
        coeffs = np.array(self.coeffs, dtype=np.float64).reshape(-1)
        expected = storage_size(self.dim, self.order)
        if coeffs.size != expected:
            raise ShapeError(
                f"Order {self.order} dimension {self.dim} tensor needs {expected} coefficients, got {coeffs.size}"
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zeros(cls, order: int, dim: int) -> "SymmetricTensor":
        return cls(order, dim, np.zeros(storage_size(dim, order)))

    @classmethod
    def scalar(cls, value: float, dim: int = 1) -> "SymmetricTensor":
        return cls(0, dim, np.array([value], dtype=np.float64))

    @classmethod
    def from_entries(cls, order: int, dim: int, entries: Mapping[Sequence[int], float]) -> "SymmetricTensor":
        """
        Build a tensor from a sparse mapping of index tuples (any ordering) to values; missing
        multisets are zero. Two keys naming the same multiset must agree.

        :param order: tensor order k
        :param dim: number of coordinates n
        :param entries: mapping from index tuples to values

        :return: SymmetricTensor = the assembled tensor
        """
        check_guards(dim, order)
        coeffs = np.zeros(storage_size(dim, order))
        seen: Dict[Tuple[int, ...], float] = {}
        for key, value in entries.items():
            if len(key) != order:
                raise ShapeError(f"Index {tuple(key)} has arity {len(key)}, tensor order is {order}")
            index = MultiIndex.of(key, dim)
            if index.indices in seen and seen[index.indices] != value:
                raise ShapeError(f"Conflicting values for multiset {index.indices}: {seen[index.indices]} and {value}")
            seen[index.indices] = value
            coeffs[index.position()] = value
        return cls(order, dim, coeffs)

    @classmethod
    def from_function(cls, order: int, dim: int, entry: Callable[[Tuple[int, ...]], float]) -> "SymmetricTensor":
        """
        Build a tensor by evaluating ``entry`` once per sorted multi-index.
        """
        return cls(order, dim, np.array([entry(indices) for indices in multisets(dim, order)], dtype=np.float64))

    def get(self, indices: Sequence[int]) -> float:
        return tensor_get(self, indices)

    def scaled(self, factor: float) -> "SymmetricTensor":
        return SymmetricTensor(self.order, self.dim, self.coeffs * factor)

    def items(self):
        return zip(multisets(self.dim, self.order), self.coeffs.tolist())

    def __repr__(self) -> str:
        return f"SymmetricTensor(order={self.order}, dim={self.dim}, coeffs={self.coeffs.tolist()})"


@lru_cache(maxsize=None)
def _contraction_plan(dim: int, order: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    # each (parent multiset P, distinct index mu in P) pair maps to exactly one child P - {mu}
    child_positions = multiset_positions(dim, order - 1)
    parents, mus, children = [], [], []
    for parent_position, parent in enumerate(multisets(dim, order)):
        for mu in sorted(set(parent)):
            child = list(parent)
            child.remove(mu)
            parents.append(parent_position)
            mus.append(mu)
            children.append(child_positions[tuple(child)])
    return np.array(parents, dtype=np.intp), np.array(mus, dtype=np.intp), np.array(children, dtype=np.intp)


def _as_vector(v: Vector, dim: int) -> np.ndarray:
    vector = np.asarray(v, dtype=np.float64).reshape(-1)
    if vector.size != dim:
        raise ShapeError(f"Vector of dimension {vector.size} does not match tensor dimension {dim}")
    return vector


def tensor_get(t: SymmetricTensor, indices: Sequence[int]) -> float:
    """
    Read entry (mu_1 ... mu_k) of the tensor; the index order does not matter.

    :param t: tensor to read
    :param indices: k indices, each below t.dim

    :return: float = the stored value of the multiset
    """
    if len(indices) != t.order:
        raise ShapeError(f"Index {tuple(indices)} has arity {len(indices)}, tensor order is {t.order}")
    return float(t.coeffs[MultiIndex.of(indices, t.dim).position()])


def contract(t: SymmetricTensor, v: Vector) -> SymmetricTensor:
    """
    Contract the last index of ``t`` with ``v``: result_{I} = sum_mu t_{I mu} v_mu.
    Stored multisets are visited in lexicographic order so the summation order is fixed.

    :param t: tensor of order k >= 1
    :param v: vector of dimension t.dim

    :return: SymmetricTensor = the order k-1 result
    """
    if t.order == 0:
        raise ShapeError("Cannot contract an order-0 tensor")
    vector = _as_vector(v, t.dim)
    parents, mus, children = _contraction_plan(t.dim, t.order)
    result = np.zeros(storage_size(t.dim, t.order - 1))
    np.add.at(result, children, t.coeffs[parents] * vector[mus])
    return SymmetricTensor(t.order - 1, t.dim, result)


def contract_vectors(t: SymmetricTensor, vectors: Sequence[Vector]) -> SymmetricTensor:
    """
    Contract ``t`` successively with each vector in ``vectors``. With as many vectors as the
    order this is the polarized differential d^k f(a; v_1, ..., v_k).
    """
    if len(vectors) > t.order:
        raise ShapeError(f"Cannot contract an order {t.order} tensor with {len(vectors)} vectors")
    result = t
    for vector in vectors:
        result = contract(result, vector)
    return result


def apply_uniform(t: SymmetricTensor, u: Vector) -> float:
    """
    The full contraction sum_{mu in n^k} t_{mu_1...mu_k} u_{mu_1}...u_{mu_k}, computed as k
    successive contractions with ``u``.

    :param t: tensor of any order
    :param u: vector of dimension t.dim

    :return: float = d^k f(a; u) when t holds the k-th derivatives of f at a
    """
    vector = _as_vector(u, t.dim)
    result = contract_vectors(t, [vector] * t.order)
    return float(result.coeffs[0])


def tensor_close(a: SymmetricTensor, b: SymmetricTensor, rel_tol: float) -> Tuple[bool, float]:
    """
    Compare two tensors coefficient-wise against ``rel_tol * (1 + max |coefficient|)``.

    :param a: first tensor
    :param b: second tensor, same order and dimension
    :param rel_tol: relative tolerance

    :return: Tuple[bool, float] = whether they are close, and the max absolute coefficient difference
    """
    if a.order != b.order or a.dim != b.dim:
        raise ShapeError(f"Cannot compare order {a.order}/dim {a.dim} with order {b.order}/dim {b.dim}")
    residual = float(np.max(np.abs(a.coeffs - b.coeffs)))
    return residual <= rel_tol * _scale(a, b), residual


def relative_residual(a: SymmetricTensor, b: SymmetricTensor) -> float:
    """
    The max coefficient difference divided by ``1 + max |coefficient|`` of either tensor.
    """
    _, residual = tensor_close(a, b, 0.0)
    return residual / _scale(a, b)


def _scale(a: SymmetricTensor, b: SymmetricTensor) -> float:
    return 1.0 + float(max(np.max(np.abs(a.coeffs)), np.max(np.abs(b.coeffs))))


def dense_array(t: SymmetricTensor) -> np.ndarray:
    """
    Expand to the full n x ... x n array by reading every index tuple.
    """
    dense = np.empty((t.dim,) * t.order)
    positions = multiset_positions(t.dim, t.order)
    for indices in product(range(t.dim), repeat=t.order):
        dense[indices] = t.coeffs[positions[tuple(sorted(indices))]]
    return dense


def tensor_to_json(t: SymmetricTensor) -> Dict[str, Any]:
    return {"order": t.order, "dim": t.dim, "coeffs": t.coeffs.tolist()}


def tensor_from_json(payload: Mapping[str, Any]) -> SymmetricTensor:
    try:
        return SymmetricTensor(int(payload["order"]), int(payload["dim"]), np.asarray(payload["coeffs"], dtype=np.float64))
    except KeyError as error:
        raise ShapeError(f"Tensor JSON is missing field {error}") from error
