import pytest

from algebra.free_algebra import FreeElement, TensorElement, bracket, diff_left, diff_right, letter, words_of_degree
from algebra.generators import L, X, Y
from algebra.nichols import NicholsKernel, serre_elements
from algebra.scalars import ONE, THETA, q

x1, x2 = letter(1), letter(2)


def w(*letters):
    return FreeElement.from_word(letters)


# --- Pairing ---


def test_pairing_letter(kernel):
    assert kernel.pairing(x1, (1,)) == ONE


def test_pairing_square(kernel):
    assert kernel.pairing(w(1, 1), (1, 1)) == 1 + q


def test_pairing_wrong_degree_is_zero(kernel):
    assert not kernel.pairing(x1, (2,))


def test_serre_elements_pair_to_zero(kernel):
    serre_x, serre_y = serre_elements()
    assert all(not kernel.pairing(serre_x, word) for word in words_of_degree((3, 1)))
    assert all(not kernel.pairing(serre_y, word) for word in words_of_degree((1, 3)))


def test_word_coordinates_match_dual_coordinates(kernel):
    for word in words_of_degree((2, 1)):
        assert kernel.word_coordinates(word) == kernel.dual_coordinates(FreeElement.from_word(word))


# --- Zero tests ---


def test_serre_elements_vanish(kernel):
    serre_x, serre_y = serre_elements()
    assert kernel.is_zero(serre_x)
    assert kernel.is_zero(serre_y)


def test_letter_is_not_zero(kernel):
    assert not kernel.is_zero(x1)


def test_l2_commutes_with_l1_squared(kernel):
    assert kernel.is_zero(bracket(L(2), L(1) * L(1)))


def test_x1_with_l1_squared_is_x3(kernel):
    assert kernel.equal(bracket(X(1), L(1) * L(1)), X(3))


def test_x1_with_l2(kernel):
    rhs = X(3).scale(q + 2) - (L(1) * X(2)).scale(THETA)
    assert kernel.equal(bracket(X(1), L(2)), rhs)


def test_derivatives_of_l1_squared(kernel):
    l1_sq = L(1) * L(1)
    assert kernel.equal(diff_right(2, l1_sq), X(2).scale(-THETA / q))
    assert kernel.equal(diff_left(1, l1_sq), Y(2).scale(THETA / q))


def test_tensor_with_serre_leg_is_zero(kernel):
    serre_x, _ = serre_elements()
    assert kernel.tensor_is_zero(TensorElement.pure(serre_x, x1))
    assert not kernel.tensor_is_zero(TensorElement.pure(x2, x1))


# --- Dimensions ---


@pytest.mark.parametrize(
    "degree, expected",
    [((1, 0), 1), ((0, 1), 1), ((1, 1), 2), ((2, 2), 6), ((3, 1), 3), ((1, 3), 3)],
)
def test_dimension(kernel, degree, expected):
    assert kernel.dimension(degree) == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_single_letter_powers_survive(kernel, n):
    assert kernel.dimension((n, 0)) == 1
    assert kernel.dimension((0, n)) == 1


@pytest.mark.parametrize("degree", [(2, 1), (1, 2), (2, 2)])
def test_exact_and_multipoint_agree(kernel, exact_kernel, degree):
    assert exact_kernel.dimension(degree) == kernel.dimension(degree)


def test_dimension_result_flags_lower_bound(kernel, exact_kernel):
    multipoint = kernel.dimension_result((1, 1))
    assert multipoint.lower_bound_only
    assert len(multipoint.points) == 3
    assert not exact_kernel.dimension_result((1, 1)).lower_bound_only


@pytest.mark.parametrize("degree, expected", [((1, 1), 2), ((2, 2), 6), ((3, 1), 3)])
def test_serre_quotient_dimension(kernel, degree, expected):
    assert kernel.serre_quotient_dimension(degree) == expected


# --- Spans ---


def test_solve_in_span(kernel):
    assert kernel.solve_in_span(X(3).scale(q), [X(3)]) == [q]
    assert kernel.solve_in_span(x1, [x2]) is None


def test_solve_zero_target(kernel):
    serre_x, _ = serre_elements()
    assert kernel.in_span(serre_x, [])


def test_solve_by_pairing_matches_solve_in_span(kernel):
    basis = [X(3), L(1) * X(2)]
    a = bracket(X(1), L(2))
    assert kernel.solve_by_pairing(a, basis) == kernel.solve_in_span(a, basis) == [q + 2, -THETA]
    assert kernel.solve_by_pairing(X(3).scale(q), [X(3)]) == [q]


def test_solve_by_pairing_outside_span(kernel):
    assert kernel.solve_by_pairing(L(1) * X(2), [X(3)]) is None
    assert kernel.solve_by_pairing(x1, [x2]) is None
    assert kernel.solve_by_pairing(x1, []) is None


def test_solve_by_pairing_with_dependent_elements(kernel):
    basis = [X(3), X(3).scale(2), L(1) * X(2)]
    coefficients = kernel.solve_by_pairing(X(3), basis)
    combination = FreeElement.sum(e.scale(c) for e, c in zip(basis, coefficients))
    assert kernel.equal(combination, X(3))


def test_configure_rejects_unknown_method():
    with pytest.raises(ValueError, match="Rank method"):
        NicholsKernel(rank_method="guess")
    kernel = NicholsKernel(rank_method="exact")
    with pytest.raises(ValueError, match="Rank method"):
        kernel.configure(rank_method="guess")
