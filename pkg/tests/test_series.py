import pytest

from algebra.free_algebra import bracket, letter
from algebra.generators import L, Lt, M, X
from algebra.scalars import I, THETA, q, rational
from algebra.series import (
    USeries,
    bar_L,
    overline_M_squared,
    named_series,
    ring_L,
    series_arith,
    series_arctan,
    series_exp,
    series_inverse,
    series_log,
    series_scale_even,
)

x1 = letter(1)


# --- Series arithmetic ---


def test_exp_of_zero():
    assert series_exp(USeries({}, 4)) == USeries.one(4)


def test_log_inverts_exp():
    z = USeries({1: x1, 2: x1.scale(q)}, 5)
    assert series_log(series_exp(z)) == z


def test_arctan_leading_terms():
    z = USeries({1: x1}, 5)
    expected = USeries({1: x1, 3: (x1**3).scale(rational(-1, 3)), 5: (x1**5).scale(rational(1, 5))}, 5)
    assert series_arctan(z) == expected


def test_arctan_matches_logarithm_form():
    s = USeries({1: x1, 2: x1.scale(rational(1, 3))}, 7)
    i = USeries.constant(I, 7)
    ratio = (i + s) * series_inverse(i - s)
    assert series_arctan(s) == series_log(ratio).scale(I / 2)


def test_inverse():
    s = USeries({0: 2, 1: x1}, 3)
    assert series_inverse(s) * s == USeries.one(3)


def test_truncation_follows_smaller_order():
    s = USeries({1: x1}, 2)
    t = USeries({1: x1}, 5)
    assert (s * t).order == 2
    assert (s * t).exponents() == [2]


def test_constant_term_requirements():
    with pytest.raises(ValueError, match="exp needs constant term"):
        series_exp(USeries.one(3))
    with pytest.raises(ValueError, match="log needs constant term"):
        series_log(USeries({1: x1}, 3))


def test_even_substitution_rejects_odd_series():
    with pytest.raises(ValueError, match="even series"):
        series_scale_even(USeries({1: x1}, 3), q)


def test_unknown_operation():
    with pytest.raises(ValueError, match="Unknown series operation"):
        series_arith(USeries.one(2), USeries.one(2), "div")


def test_negative_order_rejected():
    with pytest.raises(ValueError, match="non-negative"):
        USeries({}, -1)


# --- Named series ---


def test_x_series_first_term():
    assert named_series("X", 2).coefficient(2) == (M(1) ** 2).scale(2 * THETA)


def test_a_series_first_terms():
    assert named_series("A", 1).coefficient(1) == M(1).scale(THETA)
    assert named_series("Aprime", 1).coefficient(1) == M(1).scale(THETA)
    assert named_series("B", 2).is_zero()


def test_unknown_series():
    with pytest.raises(ValueError, match="Unknown series"):
        named_series("Z", 3)


# --- Derived elements ---


def test_bar_l_low_coefficients():
    assert bar_L(2) == Lt(2)
    assert bar_L(4) == Lt(4) - (Lt(2) * Lt(2)).scale(THETA / 2)


def test_overline_m1_squared():
    assert overline_M_squared(1) == M(1) ** 2


def test_ring_l_four():
    correction = (M(1) ** 4).scale(-THETA * (q**2 + q**-2) / 4)
    assert ring_L(4) == bar_L(4) + correction


@pytest.mark.parametrize("builder, n", [(bar_L, 3), (overline_M_squared, 2), (ring_L, 2)])
def test_derived_indices_checked(builder, n):
    with pytest.raises(ValueError):  # noqa: PT011
        builder(n)


def test_bar_l2_brackets_to_m3(kernel):
    assert kernel.equal(bracket(bar_L(2), L(1)), M(3))


def test_x1_with_overline_m1_squared(kernel):
    assert kernel.equal(bracket(X(1), overline_M_squared(1)), X(3))
