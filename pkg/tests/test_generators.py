import pytest

from algebra.free_algebra import FreeElement, bracket, letter
from algebra.generators import GENERATOR_NAMES, L, Lh, Lp, Lt, M, NamedGenerator, X, Y, generator
from algebra.scalars import THETA, q


def test_first_generators_are_letters():
    assert generator("X", 1) == letter(1)
    assert generator("Y", 1) == letter(2)


def test_l1_expansion():
    expected = FreeElement.from_word((1, 2)) - FreeElement.from_word((2, 1)).scale(1 / q)
    assert L(1) == expected
    assert M(1) == L(1)
    assert Lp(1) == L(1)


def test_index_zero_constants():
    assert L(0) == FreeElement.constant(1 / THETA)
    assert Lp(0) == FreeElement.constant(1 / THETA)
    assert Lt(0) == FreeElement.constant(1 / THETA)
    assert Lt(-1).is_zero()


def test_degrees():
    assert X(3).degree() == (3, 2)
    assert Y(3).degree() == (2, 3)
    assert L(3).degree() == (3, 3)
    assert M(5).degree() == (5, 5)


def test_lhat_two_is_twice_l1_squared():
    # chi(delta, delta) = -1 turns the bracket into an anti-commutator
    assert Lh(2) == (L(1) * L(1)).scale(2)


def test_aliases():
    assert generator("Ltilde", 2) == Lt(2)
    assert generator("Lhat", 3) == Lh(3)
    assert generator("Lprime", 2) == Lp(2)


@pytest.mark.parametrize("name, n", [("X", 0), ("Y", -1), ("M", 2), ("Lh", 0)])
def test_invalid_index(name, n):
    with pytest.raises(ValueError, match="Invalid index"):
        generator(name, n)


def test_unknown_name():
    with pytest.raises(ValueError, match="Unknown generator"):
        generator("Q", 1)


def test_named_generator():
    named = NamedGenerator("X", 2)
    assert named.label == "X2"
    assert named.element == X(2)
    assert set(GENERATOR_NAMES) >= {"X", "Y", "L", "M"}


def test_m3_commutes_with_m1(kernel):
    assert kernel.is_zero(bracket(M(3), M(1)))


def test_x_and_y_are_nonzero(kernel):
    for n in range(1, 4):
        assert not kernel.is_zero(X(n))
        assert not kernel.is_zero(Y(n))
