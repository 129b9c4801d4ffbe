import pytest

from algebra.scalars import (
    HALF,
    I,
    ONE,
    THETA,
    THETA_PRIME,
    ZERO,
    PoleError,
    aseq,
    aseq_closed,
    eval_at,
    gaussian,
    parse_scalar,
    pseq,
    pseq_closed,
    q,
    qint,
    qseq,
    qseq_closed,
    rational,
    root_of_unity_order,
    rseq,
    rseq_closed,
    scalar,
    scalar_arith,
    scalar_to_json,
    to_text,
)

# --- Field arithmetic ---


def test_theta_times_inverse_is_one():
    assert scalar_arith(THETA, 1 / THETA, "mul") == ONE


def test_theta_plus_theta_prime():
    assert scalar_arith(THETA, THETA_PRIME, "add") == 2 * q


def test_i_squared():
    assert scalar_arith(I, I, "mul") == scalar(-1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith(q, ZERO, "div")


def test_unknown_operation():
    with pytest.raises(ValueError, match="Unknown scalar operation"):
        scalar_arith(q, q, "pow")


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


# --- Evaluation ---


def test_eval_theta_at_two():
    assert eval_at(THETA, 2) == gaussian("3/2")


def test_eval_qint_three_at_two():
    assert eval_at(qint(3), 2) == gaussian("21/4")


def test_eval_at_pole():
    with pytest.raises(PoleError):
        eval_at(1 / (q - 1), 1)


def test_eval_at_gaussian_point():
    # q = i gives theta = i - 1/i = 2i
    assert eval_at(THETA, (0, 1)) == gaussian((0, 2))


# --- Named sequences ---


def test_qint_small():
    assert qint(1) == ONE
    assert qint(2) == q + 1 / q
    assert qint(3) == q**2 + 1 + q**-2


def test_pseq_qseq_first_terms():
    assert pseq(1) == q + 2
    assert qseq(1) == q - 2
    assert pseq(2) == q**2 - 2
    assert qseq(2) == q**2 - 2


@pytest.mark.parametrize("n", range(7))
def test_pseq_qseq_closed_forms(n):
    assert pseq(n) == pseq_closed(n)
    assert qseq(n) == qseq_closed(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_even_indices_agree(n):
    assert pseq(2 * n) == qseq(2 * n)


def test_aseq_values():
    assert aseq(1) == ONE
    assert aseq(2) == THETA / 2
    assert aseq(3) == (q**2 - 1 + q**-2) / 4


@pytest.mark.parametrize("n", range(1, 7))
def test_aseq_closed_form(n):
    assert aseq(n) == aseq_closed(n)


def test_rseq_values():
    assert rseq(1) == ONE
    assert rseq(2) == ZERO
    assert rseq(3) == qint(3) / 12


@pytest.mark.parametrize("k", range(1, 4))
def test_rseq_closed_form(k):
    assert rseq(k) == rseq_closed(k)


@pytest.mark.parametrize("bad", [lambda: qint(-1), lambda: pseq(-1), lambda: aseq(0), lambda: rseq(0)])
def test_negative_indices_rejected(bad):
    with pytest.raises(ValueError):  # noqa: PT011
        bad()


# --- Canonical forms ---


def test_zero_text():
    assert to_text(ZERO) == "0"


@pytest.mark.parametrize("value", [THETA, I / q, qint(3) / 12, HALF, 1 + 2 * I])
def test_text_reads_back(value):
    assert parse_scalar(to_text(value)) == value


def test_equal_scalars_share_text():
    assert to_text(q * q / q) == to_text(q)


def test_scalar_json_shape():
    payload = scalar_to_json(THETA)
    assert set(payload) == {"num", "den"}
    assert payload["den"] == [[1, "1", "0"]]


def test_root_of_unity_order():
    assert root_of_unity_order(-ONE) == 2
    assert root_of_unity_order(I) == 4
    assert root_of_unity_order(q) is None
