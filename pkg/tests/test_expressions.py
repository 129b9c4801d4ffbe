import pytest

from algebra.free_algebra import anti_bracket, bracket, letter
from algebra.generators import L, Lp, M, X, Y
from algebra.scalars import HALF, I, THETA, q
from algebra.series import bar_L
from utils.expressions import ExpressionError, parse_expression

x1, x2 = letter(1), letter(2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x1", x1),
        ("X3", X(3)),
        ("Y2", Y(2)),
        ("Lp2", Lp(2)),
        ("M3", M(3)),
        ("Lbar2", bar_L(2)),
    ],
)
def test_generator_names(text, expected):
    assert parse_expression(text) == expected


def test_brackets():
    assert parse_expression("[x1,x2]") == bracket(x1, x2)
    assert parse_expression("{x1, x2}") == anti_bracket(x1, x2)
    assert parse_expression("[X1,[X1,Y1]]") == bracket(X(1), bracket(X(1), Y(1)))


def test_products_and_powers():
    assert parse_expression("L1^2") == L(1) * L(1)
    assert parse_expression("L1 X2") == L(1) * X(2)
    assert parse_expression("x1*x2*x1") == x1 * x2 * x1


def test_scalars():
    assert parse_expression("(q+2) X3 - theta L1 X2") == X(3).scale(q + 2) - (L(1) * X(2)).scale(THETA)
    assert parse_expression("i x1") == x1.scale(I)
    assert parse_expression("x1/2") == x1.scale(HALF)


def test_leading_minus():
    assert parse_expression("-x1 + x2") == x2 - x1


def test_serre_expression_pairs_to_zero(kernel):
    assert not kernel.pairing(parse_expression("[X1,X2]"), (1, 1, 1, 2))


@pytest.mark.parametrize("text", ["[x1,", "x3", "x1 +", "X1)"])
def test_parse_errors(text):
    with pytest.raises(ExpressionError) as info:
        parse_expression(text)
    assert info.value.position >= 0
    assert info.value.text == text


def test_invalid_index_reports_position():
    with pytest.raises(ExpressionError) as info:
        parse_expression("x1 + M2")
    assert info.value.position == 5
    assert "Invalid index" in str(info.value)


def test_division_by_element_rejected():
    with pytest.raises(ExpressionError, match="scalar divisor"):
        parse_expression("x1 / x2")
