import pytest

from algebra.free_algebra import (
    FreeElement,
    TensorElement,
    anti_bracket,
    bracket,
    chi,
    coproduct,
    counit_left,
    counit_right,
    diff_left,
    diff_right,
    letter,
    multiply,
    parse_word,
    word_degree,
    word_text,
    words_of_degree,
)
from algebra.scalars import ONE, q


def w(*letters):
    return FreeElement.from_word(letters)


x1, x2 = letter(1), letter(2)


def random_element(rng, terms=4, max_length=4):
    acc = FreeElement.zero()
    for _ in range(terms):
        length = rng.randint(0, max_length)
        word = tuple(rng.choice((1, 2)) for _ in range(length))
        acc = acc + w(*word).scale(rng.randint(-3, 3))
    return acc


# --- Words ---


def test_words_of_degree_count():
    assert len(words_of_degree((2, 2))) == 6
    assert words_of_degree((1, 1)) == [(1, 2), (2, 1)]
    assert words_of_degree((0, 0)) == [()]


def test_word_text_round_trip():
    assert word_text((1, 1, 2)) == "x1 x1 x2"
    assert word_text(()) == "1"
    assert parse_word("x1x1x2") == (1, 1, 2)
    assert word_degree((1, 2, 2)) == (1, 2)


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):  # noqa: PT011
        parse_word("x3")


def test_braiding_matrix():
    assert chi((1, 0), (1, 0)) == q
    assert chi((1, 0), (0, 1)) == 1 / q
    assert chi((0, 1), (0, 1)) == -q
    # chi(delta, delta) = -1
    assert chi((1, 1), (1, 1)) == -ONE


# --- Products and brackets ---


def test_multiply_letters():
    assert multiply(x1, x2) == w(1, 2)


def test_multiply_is_bilinear():
    assert (x1 + x2) * x1 == w(1, 1) + w(2, 1)


def test_bracket_of_letters():
    assert bracket(x1, x2) == w(1, 2) - w(2, 1).scale(1 / q)


def test_bracket_same_letter():
    assert bracket(x1, x1) == w(1, 1).scale(1 - q)


def test_anti_bracket_of_letters():
    assert anti_bracket(x1, x2) == w(1, 2) + w(2, 1).scale(1 / q)
    assert anti_bracket(x1, x1) == w(1, 1).scale(1 + q)


def test_brackets_sum_to_twice_product():
    a, b = x1, bracket(x1, x2)
    assert bracket(a, b) + anti_bracket(a, b) == (a * b).scale(2)


def test_braided_jacobi(rng):
    for _ in range(5):
        a, b, c = (w(*(rng.choice((1, 2)) for _ in range(rng.randint(1, 3)))) for _ in range(3))
        da, db, dc = (word_degree(e.words()[0]) for e in (a, b, c))
        rhs = bracket(a, bracket(b, c)) - (b * bracket(a, c)).scale(chi(da, db)) + (bracket(a, c) * b).scale(chi(db, dc))
        assert bracket(bracket(a, b), c) == rhs


def test_bracket_splits_inhomogeneous_arguments():
    a = x1 + x2
    assert bracket(a, x1) == bracket(x1, x1) + bracket(x2, x1)


def test_zero_compares_to_int():
    assert FreeElement.zero() == 0
    assert x1 - x1 == 0


def test_negative_power_rejected():
    with pytest.raises(ValueError, match="Negative power"):
        x1 ** -1


def test_letter_index_checked():
    with pytest.raises(ValueError, match="Letter index"):
        letter(3)


def test_element_text():
    assert FreeElement.zero().to_text() == "0"
    assert w(1, 2).to_text() == "1 * x1 x2"


# --- Coproduct ---


def test_coproduct_of_letter():
    assert coproduct(x1) == TensorElement.pure(x1, FreeElement.one()) + TensorElement.pure(FreeElement.one(), x1)


def test_coproduct_of_word():
    delta = coproduct(w(1, 2))
    assert delta.num_terms == 4
    assert delta.coefficient((1, 2), ()) == ONE
    assert delta.coefficient((1,), (2,)) == ONE
    assert delta.coefficient((2,), (1,)) == 1 / q
    assert delta.coefficient((), (1, 2)) == ONE


def test_coproduct_restricted_to_left_degree():
    delta = coproduct(w(1, 2), left_degree=(0, 1))
    assert delta == TensorElement({((2,), (1,)): 1 / q})


def test_coproduct_is_multiplicative():
    a, b = w(1, 2), w(2, 1, 1)
    assert coproduct(a * b) == coproduct(a) * coproduct(b)


def test_counit_laws(rng):
    for _ in range(5):
        a = random_element(rng)
        delta = coproduct(a)
        assert counit_left(delta) == a
        assert counit_right(delta) == a


def _triple(delta, split_left):
    acc = {}
    for (left, right), c in delta.items():
        leg = left if split_left else right
        for (a, b), d in coproduct(FreeElement.from_word(leg)).items():
            key = (a, b, right) if split_left else (left, a, b)
            acc[key] = acc.get(key, 0) + c * d
    return {k: v for k, v in acc.items() if v != 0}


def test_coproduct_is_coassociative(rng):
    for length in (3, 5, 8):
        word = tuple(rng.choice((1, 2)) for _ in range(length))
        delta = coproduct(w(*word))
        assert _triple(delta, split_left=True) == _triple(delta, split_left=False)


# --- Derivations ---


def test_derivations_on_letters():
    assert diff_right(2, x2) == FreeElement.one()
    assert diff_right(2, x1).is_zero()
    assert diff_left(1, x1) == FreeElement.one()


def test_diff_right_of_square():
    assert diff_right(1, w(1, 1)) == x1.scale(1 + q)


def test_diff_right_skew_leibniz():
    a, b = w(1, 2), w(2, 1)
    expected = a * diff_right(1, b) + diff_right(1, a).scale(chi((1, 0), (1, 1))) * b
    assert diff_right(1, a * b) == expected


def test_derivation_index_checked():
    with pytest.raises(ValueError, match="Derivation index"):
        diff_right(3, x1)


def _homogeneous(rng, max_length=3):
    degree = (rng.randint(0, max_length), rng.randint(0, max_length))
    words = words_of_degree(degree)
    acc = FreeElement.zero()
    for word in rng.sample(words, min(2, len(words))):
        acc = acc + w(*word).scale(rng.randint(1, 4))
    return acc, degree


@pytest.mark.parametrize("i", [1, 2])
def test_diff_right_leibniz_on_random_elements(rng, i):
    alpha = (1, 0) if i == 1 else (0, 1)
    for _ in range(6):
        a, _ = _homogeneous(rng)
        b, db = _homogeneous(rng)
        expected = a * diff_right(i, b) + diff_right(i, a).scale(chi(alpha, db)) * b
        assert diff_right(i, a * b) == expected


@pytest.mark.parametrize("i", [1, 2])
def test_diff_left_leibniz_on_random_elements(rng, i):
    alpha = (1, 0) if i == 1 else (0, 1)
    for _ in range(6):
        a, da = _homogeneous(rng)
        b, _ = _homogeneous(rng)
        expected = diff_left(i, a) * b + (a * diff_left(i, b)).scale(chi(da, alpha))
        assert diff_left(i, a * b) == expected
