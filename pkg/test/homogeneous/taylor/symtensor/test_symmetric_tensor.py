#  Copyright 2026 homogeneous-taylor contributors.
import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from homogeneous.taylor.symtensor import (
    SymmetricTensor,
    apply_uniform,
    contract,
    contract_vectors,
    dense_array,
    relative_residual,
    storage_size,
    tensor_close,
    tensor_from_json,
    tensor_get,
    tensor_to_json,
)
from homogeneous.taylor.utils import ShapeError

MATRIX = SymmetricTensor.from_entries(2, 2, {(0, 0): 1.0, (0, 1): 2.0, (1, 1): 5.0})
# only the multiset {0, 0, 1} is nonzero
CUBIC = SymmetricTensor.from_entries(3, 2, {(0, 0, 1): 2.0})

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)


@st.composite
def tensors_and_vectors(draw, max_dim=4, max_order=4):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    order = draw(st.integers(min_value=1, max_value=max_order))
    coeffs = draw(arrays(np.float64, storage_size(dim, order), elements=finite))
    vector = draw(arrays(np.float64, dim, elements=finite))
    return SymmetricTensor(order, dim, coeffs), vector


def test_tensor_get_ignores_index_order():
    assert tensor_get(MATRIX, (1, 0)) == 2.0
    assert tensor_get(MATRIX, (0, 0)) == 1.0
    assert tensor_get(SymmetricTensor.scalar(7.0), ()) == 7.0


def test_tensor_get_rejects_wrong_arity():
    with pytest.raises(ShapeError):
        tensor_get(MATRIX, (0,))


def test_from_entries_rejects_conflicting_permutations():
    with pytest.raises(ShapeError):
        SymmetricTensor.from_entries(2, 2, {(0, 1): 1.0, (1, 0): 2.0})


def test_contract_matrix_gives_row_sums():
    row_sums = contract(MATRIX, [1.0, 1.0])
    assert row_sums.order == 1
    assert row_sums.coeffs.tolist() == [3.0, 7.0]
    assert contract(row_sums, [1.0, 0.0]).coeffs.tolist() == [3.0]


def test_contract_cubic_matches_dense_expansion():
    result = contract(CUBIC, [1.0, 1.0])
    assert result.coeffs.tolist() == [2.0, 2.0, 0.0]
    expected = np.einsum("ijk,k->ij", dense_array(CUBIC), np.array([1.0, 1.0]))
    np.testing.assert_array_equal(dense_array(result), expected)


def test_contract_rejects_scalar_and_dimension_mismatch():
    with pytest.raises(ShapeError):
        contract(SymmetricTensor.scalar(1.0), [1.0])
    with pytest.raises(ShapeError):
        contract(MATRIX, [1.0, 1.0, 1.0])


@pytest.mark.parametrize(
    "tensor,vector,expected",
    [
        (MATRIX, [1.0, 1.0], 10.0),
        (SymmetricTensor(1, 2, [0.6, 0.8]), [3.0, 4.0], 5.0),
        (CUBIC, [2.0, 1.0], 24.0),
        (SymmetricTensor.scalar(7.0, 2), [5.0, 5.0], 7.0),
    ],
)
def test_apply_uniform_examples(tensor, vector, expected):
    assert apply_uniform(tensor, vector) == pytest.approx(expected, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(tensors_and_vectors())
def test_apply_uniform_matches_brute_force_sum(case):
    tensor, vector = case
    dense = dense_array(tensor)
    every_index = itertools.product(range(tensor.dim), repeat=tensor.order)
    expected = sum(dense[indices] * np.prod(vector[list(indices)]) for indices in every_index)
    assert apply_uniform(tensor, vector) == pytest.approx(expected, rel=1e-12, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(tensors_and_vectors(max_order=3), st.randoms(use_true_random=False))
def test_contract_vectors_is_order_independent(case, random):
    tensor, vector = case
    vectors = [vector * (i + 1) - i for i in range(tensor.order)]
    shuffled = list(vectors)
    random.shuffle(shuffled)
    forward = contract_vectors(tensor, vectors).coeffs[0]
    assert contract_vectors(tensor, shuffled).coeffs[0] == pytest.approx(forward, rel=1e-12, abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(tensors_and_vectors(), st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=-2.0, max_value=2.0))
def test_contract_is_linear_in_the_vector(case, alpha, beta):
    tensor, u = case
    v = u[::-1] - 0.5
    combined = contract(tensor, alpha * u + beta * v).coeffs
    expected = alpha * contract(tensor, u).coeffs + beta * contract(tensor, v).coeffs
    scale = 1.0 + np.abs(tensor.coeffs).max() * (abs(alpha) + abs(beta)) * (1.0 + np.abs(u).sum() + 0.5 * u.size)
    np.testing.assert_allclose(combined, expected, rtol=0.0, atol=1e-12 * scale)


def test_tensor_close_examples():
    assert tensor_close(MATRIX, MATRIX, 0.0) == (True, 0.0)
    perturbed = SymmetricTensor(2, 2, [1.0, 2.0, 5.0 + 1e-12])
    assert tensor_close(MATRIX, perturbed, 1e-9)[0]
    identity = SymmetricTensor(2, 2, [1.0, 0.0, 1.0])
    close, residual = tensor_close(identity, SymmetricTensor(2, 2, [1.0, 0.0, 2.0]), 1e-9)
    assert not close
    assert residual == 1.0


def test_tensor_close_rejects_shape_mismatch():
    with pytest.raises(ShapeError):
        tensor_close(MATRIX, CUBIC, 1e-9)


def test_relative_residual_uses_largest_coefficient():
    identity = SymmetricTensor(2, 2, [1.0, 0.0, 1.0])
    assert relative_residual(identity, SymmetricTensor(2, 2, [1.0, 0.0, 2.0])) == pytest.approx(1.0 / 3.0)


def test_dense_array_is_symmetric():
    dense = dense_array(CUBIC)
    for permutation in itertools.permutations(range(3)):
        np.testing.assert_array_equal(dense, np.transpose(dense, permutation))


def test_tensor_json_keeps_canonical_order():
    payload = json.loads(json.dumps(tensor_to_json(MATRIX)))
    assert payload == {"order": 2, "dim": 2, "coeffs": [1.0, 2.0, 5.0]}
    restored = tensor_from_json(payload)
    assert restored.coeffs.tolist() == MATRIX.coeffs.tolist()


def test_tensor_from_json_reports_missing_fields():
    with pytest.raises(ShapeError):
        tensor_from_json({"order": 1, "dim": 2})
    with pytest.raises(ShapeError):
        tensor_from_json({"order": 1, "dim": 2, "coeffs": [1.0]})


def test_coefficients_are_read_only():
    with pytest.raises(ValueError):
        MATRIX.coeffs[0] = 3.0
