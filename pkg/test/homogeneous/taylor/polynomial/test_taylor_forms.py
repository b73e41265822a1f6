#  Copyright 2026 homogeneous-taylor contributors.
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homogeneous.taylor.homfun import (
    FunctionSpec,
    euclidean_spec,
    evaluate,
    make_function,
    power_function,
    random_pd_matrix,
    sample_pair,
)
from homogeneous.taylor.polynomial import (
    derivative_tensors,
    lower_from_top,
    remainder_ratios,
    taylor_binomial_form,
    taylor_collapsed,
    taylor_collected_form,
    taylor_power_collapsed,
    taylor_standard,
)
from homogeneous.taylor.utils import DegreeMismatchError, DomainError, SizeGuardError

EUCLIDEAN = make_function(euclidean_spec(2))
SQUARED = power_function(EUCLIDEAN, 2)
MONOMIAL = make_function(FunctionSpec("monomial", alpha=[2.0, 1.0]))
PNORM = make_function(FunctionSpec("pnorm", p=3.0))


def test_derivative_tensors_of_euclidean_norm():
    tensors = derivative_tensors(EUCLIDEAN, [3.0, 4.0], 2)
    assert tensors[0].coeffs.tolist() == pytest.approx([5.0])
    np.testing.assert_allclose(tensors[1].coeffs, [0.6, 0.8], atol=1e-14)
    np.testing.assert_allclose(tensors[2].coeffs, [0.128, -0.096, 0.072], atol=1e-14)


def test_third_derivatives_of_monomial():
    top = derivative_tensors(MONOMIAL, [1.0, 1.0], 3)[3]
    assert top.get((0, 0, 1)) == pytest.approx(2.0)
    assert top.get((0, 0, 0)) == 0.0 and top.get((0, 1, 1)) == 0.0 and top.get((1, 1, 1)) == 0.0


@pytest.mark.parametrize("a", [[3.0, 4.0], [-1.0, 0.5]])
def test_hessian_of_squared_norm(a):
    hessian = derivative_tensors(SQUARED, a, 2)[2]
    np.testing.assert_allclose(hessian.coeffs, [2.0, 0.0, 2.0], atol=1e-12)


def test_derivative_order_guard():
    with pytest.raises(SizeGuardError):
        derivative_tensors(EUCLIDEAN, [3.0, 4.0], 11)


def test_taylor_standard_examples():
    assert taylor_standard(EUCLIDEAN, [3.0, 4.0], [1.0, 0.0], 1) == pytest.approx(0.6, abs=1e-12)
    assert taylor_standard(MONOMIAL, [1.0, 1.0], [2.0, 1.0], 3) == pytest.approx(4.0, abs=1e-12)
    for m in (1, 2, 3):
        assert taylor_standard(PNORM, [1.0, 2.0], [1.0, 2.0], m) == pytest.approx(evaluate(PNORM, [1.0, 2.0]), abs=1e-14)


def test_taylor_standard_needs_order_and_domain():
    with pytest.raises(SizeGuardError):
        taylor_standard(EUCLIDEAN, [3.0, 4.0], [1.0, 0.0], 0)
    with pytest.raises(DomainError):
        taylor_standard(EUCLIDEAN, [3.0, 4.0], [0.0, 0.0], 1)


def test_taylor_collapsed_examples():
    assert taylor_collapsed(EUCLIDEAN, [3.0, 4.0], [1.0, 0.0], 1) == pytest.approx(0.6, abs=1e-12)
    assert taylor_collapsed(MONOMIAL, [1.0, 1.0], [2.0, 1.0], 3) == pytest.approx(4.0, abs=1e-12)
    assert taylor_collapsed(SQUARED, [3.0, 4.0], [1.0, 2.0], 2) == pytest.approx(5.0, abs=1e-12)


def test_taylor_collapsed_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        taylor_collapsed(EUCLIDEAN, [3.0, 4.0], [1.0, 0.0], 2)


def test_taylor_power_collapsed_examples():
    assert taylor_power_collapsed(EUCLIDEAN, [3.0, 4.0], [1.0, 2.0], 2) == pytest.approx(5.0, abs=1e-12)
    assert taylor_power_collapsed(PNORM, [1.0, 1.0], [1.0, 1.0], 3) == pytest.approx(2.0, abs=1e-12)
    matrix = random_pd_matrix(np.random.default_rng(3), 3)
    root = make_function(FunctionSpec("quadratic_root", R=matrix.tolist()))
    a, b = np.array([1.0, -0.5, 0.3]), np.array([0.2, 1.1, -0.7])
    assert taylor_power_collapsed(root, a, b, 2) == pytest.approx(float(b @ matrix @ b), rel=1e-10)


def test_taylor_power_collapsed_needs_degree_one():
    with pytest.raises(DegreeMismatchError):
        taylor_power_collapsed(MONOMIAL, [1.0, 1.0], [2.0, 1.0], 2)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), m=st.integers(min_value=1, max_value=4))
def test_standard_equals_collapsed_for_pnorm_powers(seed, m):
    f = power_function(PNORM, m)
    a, b = sample_pair(f, np.random.default_rng(seed), 2)
    standard = taylor_standard(f, a, b, m)
    collapsed = taylor_collapsed(f, a, b, m)
    assert abs(standard - collapsed) <= 1e-8 * (1.0 + abs(evaluate(f, a)) + abs(evaluate(f, b)))


def test_expansion_point_matters():
    # swapping a and b changes the polynomial, the collapsed form is not symmetric in its arguments
    f = power_function(PNORM, 2)
    a, b = [1.0, 2.0], [2.0, 0.5]
    assert abs(taylor_collapsed(f, a, b, 2) - taylor_collapsed(f, b, a, 2)) > 1e-6


@pytest.mark.parametrize("f,m", [(EUCLIDEAN, 1), (MONOMIAL, 3), (power_function(PNORM, 3), 3)])
def test_intermediate_forms_agree(f, m):
    a, b = [1.1, 0.6], [0.9, 1.4]
    standard = taylor_standard(f, a, b, m)
    collapsed = taylor_collapsed(f, a, b, m)
    assert taylor_binomial_form(f, a, b, m) == pytest.approx(standard, rel=1e-10, abs=1e-12)
    assert taylor_collected_form(f, a, b, m) == pytest.approx(collapsed, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_lower_from_top_matches_extracted_tensor(k):
    f = power_function(PNORM, 3)
    a = [1.3, 0.8]
    expected = derivative_tensors(f, a, 3)[k]
    np.testing.assert_allclose(lower_from_top(f, a, 3, k).coeffs, expected.coeffs, rtol=1e-10, atol=1e-10)


def test_lower_from_top_order_guard():
    with pytest.raises(SizeGuardError):
        lower_from_top(EUCLIDEAN, [3.0, 4.0], 1, 2)


def test_remainder_ratio_of_euclidean_norm():
    steps = remainder_ratios(EUCLIDEAN, [3.0, 4.0], [1.0, 0.0], 1, (0.1, 0.05))
    for step in steps:
        assert 0.15 <= step.ratio <= 0.45


def test_remainder_vanishes_for_polynomials():
    for step in remainder_ratios(MONOMIAL, [1.0, 1.0], [2.0, 1.0], 3):
        assert abs(step.remainder) <= 1e-12
        assert step.ratio is None
