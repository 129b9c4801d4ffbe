import pytest

from algebra.free_algebra import FreeElement, TensorElement, bracket
from algebra.generators import L, M, X, Y
from algebra.scalars import ONE, THETA, qint
from algebra.series import bar_L, overline_M_squared
from algebra.subquotient import (
    balanced_projection,
    coproduct_formula,
    coproduct_residual_in_m_subalgebra,
    cor25_rhs,
    imaginary_monomials,
    in_k_ge1,
    is_primitive,
    lbar_leading_coefficient,
    lring_leading_coefficient,
    m_monomials,
    mbar_leading_coefficient,
    primitive_space_dimension,
    projection_is_multiplicative,
    subquotient_coproduct,
    verify_coproduct_formulas,
    x_coefficient,
)

one = FreeElement.one()


def pure(left, right, coeff=1):
    return TensorElement.pure(left, right, coeff)


# --- Membership ---


def test_l2_in_k_ge1(kernel):
    assert in_k_ge1(L(2), kernel)


def test_y1_not_in_k_ge1(kernel):
    assert not in_k_ge1(Y(1), kernel)


def test_x3_in_k_ge1(kernel):
    assert in_k_ge1(X(3), kernel)


# --- Coproducts ---


def test_coproduct_of_l1(kernel):
    assert kernel.tensor_equal(subquotient_coproduct(L(1), kernel), pure(L(1), one) + pure(one, L(1)))


def test_coproduct_of_l2(kernel):
    expected = pure(L(2), one) + pure(L(1), L(1), -THETA) + pure(one, L(2))
    assert kernel.tensor_equal(subquotient_coproduct(L(2), kernel), expected)


def test_coproduct_of_m3(kernel):
    assert kernel.tensor_equal(subquotient_coproduct(M(3), kernel), coproduct_formula("M3"))


def test_coproduct_needs_balanced_degree(kernel):
    with pytest.raises(ValueError, match="balanced degree"):
        subquotient_coproduct(X(2), kernel)


def test_coproduct_rejects_elements_outside_k_ge1(kernel):
    with pytest.raises(ValueError, match="K>=1"):
        subquotient_coproduct(Y(1) * X(1), kernel)


def test_l3_display(kernel):
    computed = subquotient_coproduct(L(3), kernel, check_membership=False)
    assert kernel.tensor_equal(computed, cor25_rhs(3))


def test_coproduct_formulas_hold(kernel):
    report = verify_coproduct_formulas(2, kernel)
    assert len(report) == 4
    assert all(entry["holds"] for entry in report)


def test_cor25_needs_positive_index():
    with pytest.raises(ValueError):  # noqa: PT011
        cor25_rhs(0)


# --- Primitives ---


def test_l1_is_primitive(kernel):
    assert is_primitive(L(1), kernel)
    assert is_primitive(L(1) * L(1), kernel)


def test_m3_is_not_primitive(kernel):
    assert not is_primitive(M(3), kernel)


def test_primitive_dimension_at_delta(kernel):
    assert primitive_space_dimension([L(1)], kernel) == 1


def test_primitive_dimension_at_two_delta(kernel):
    assert primitive_space_dimension([L(2), L(1) * L(1)], kernel) == 1


def test_no_primitives_at_three_delta(kernel):
    assert len(imaginary_monomials(3)) == 3
    assert primitive_space_dimension(imaginary_monomials(3), kernel) == 0


# --- Balanced projection ---


@pytest.mark.parametrize("a, b", [(L(1), L(1)), (L(1), L(2)), (L(2), L(1))])
def test_projection_is_multiplicative(kernel, a, b):
    assert projection_is_multiplicative(a, b, kernel)


@pytest.mark.slow
@pytest.mark.parametrize("a, b", [(L(1), M(3)), (M(3), L(1)), (L(2), L(2)), (L(3), L(1))])
def test_projection_is_multiplicative_at_four_delta(kernel, a, b):
    assert projection_is_multiplicative(a, b, kernel)


def test_projection_drops_unbalanced_left_legs():
    t = pure(L(1), X(1)) + pure(X(1), L(1)) + pure(one, X(1))
    assert balanced_projection(t) == pure(L(1), X(1)) + pure(one, X(1))


@pytest.mark.slow
def test_overline_m3_squared_is_primitive(kernel):
    assert is_primitive(overline_M_squared(3), kernel)


# --- M-generated subalgebra ---


def test_m_monomials():
    assert len(m_monomials(1)) == 1
    assert len(m_monomials(3)) == 2
    assert m_monomials(0) == [one]


def test_m3_coproduct_stays_in_m_subalgebra(kernel):
    assert coproduct_residual_in_m_subalgebra(M(3), kernel)


def test_imaginary_monomials_at_two_delta():
    assert set(imaginary_monomials(2)) == {M(1) ** 2, L(2)}


# --- Leading coefficients ---


def test_x_coefficient_of_x1_with_m1_squared(kernel):
    assert x_coefficient(bracket(X(1), overline_M_squared(1)), 3, kernel) == ONE


def test_x_coefficient_outside_span(kernel):
    assert x_coefficient(Y(2), 3, kernel) is None


def test_leading_coefficient_formulas():
    assert mbar_leading_coefficient(0) == ONE
    assert mbar_leading_coefficient(1) == -4 * qint(3) / 3
    assert lring_leading_coefficient(1) == qint(4) / 4


@pytest.mark.parametrize("n", [1, 2])
def test_lbar_leading_coefficient_on_x(kernel, n):
    actual = x_coefficient(bracket(X(1), bar_L(2 * n)), 2 * n + 1, kernel)
    assert actual == lbar_leading_coefficient(n)


@pytest.mark.slow
def test_lbar6_leading_coefficient_on_x7(kernel):
    assert x_coefficient(bracket(X(1), bar_L(6)), 7, kernel) == lbar_leading_coefficient(3)
