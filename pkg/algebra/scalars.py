"""Exact arithmetic in Q(i)(q) and the named scalar sequences.

Scalars are sympy ``FracElement`` values of the rational function field
``QQ_I(q)``. sympy keeps numerator and denominator coprime, so equality is a
structural comparison. The canonical text and JSON forms normalise the
denominator to be monic.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from sympy import I as SYMPY_I
from sympy import QQ_I, Symbol, sympify
from sympy.ntheory import nextprime, sqrt_mod
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)
from sympy.polys.fields import FracElement, field

logger = logging.getLogger(__name__)

K, q = field("q", QQ_I)
Scalar = FracElement

Q_SYMBOL = Symbol("q")
ZERO = K.zero
ONE = K.one
I = K(SYMPY_I)
HALF = ONE / 2
QUARTER = ONE / 4

# theta = q - q^-1 and theta' = q + q^-1
THETA = q - 1 / q
THETA_PRIME = q + 1 / q

# Only even powers of alpha = sqrt(iq/2) and beta = sqrt(i/(2q)) are needed.
ALPHA_SQUARED = I * q / 2
BETA_SQUARED = I / (2 * q)
ALPHA_FOURTH = ALPHA_SQUARED**2
BETA_FOURTH = BETA_SQUARED**2

_PARSE_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication)


class PoleError(ArithmeticError):
    """Raised when a scalar is evaluated at a pole of its denominator."""


def scalar(value: Any) -> Scalar:
    """Coerce an int, sympy number, Fraction or Scalar into Q(i)(q)."""
    if isinstance(value, FracElement) and value.field == K:
        return value
    if isinstance(value, int):
        return K(value)
    return K.from_expr(sympify(value))


def rational(numerator: int, denominator: int = 1) -> Scalar:
    """The rational constant numerator/denominator."""
    if denominator == 0:
        raise ZeroDivisionError("Rational constant with zero denominator")
    return K(numerator) / denominator


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Field operation on two scalars; ``op`` is one of add, sub, mul, div."""
    a, b = scalar(a), scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("Division by zero in Q(i)(q)")
        return a / b
    raise ValueError(f"Unknown scalar operation: {op}")


def gaussian(value: Any) -> Any:
    """Convert a point specification into an exact Gaussian rational."""
    if QQ_I.of_type(value):
        return value
    if isinstance(value, tuple):
        real, imag = value
        return QQ_I.from_sympy(sympify(real) + sympify(imag) * SYMPY_I)
    return QQ_I.from_sympy(sympify(value))


def eval_at(a: Scalar, point: Any) -> Any:
    """Exact substitution q -> point, returning a Gaussian rational."""
    a = scalar(a)
    value = gaussian(point)
    denominator = a.denom(value)
    if not denominator:
        raise PoleError(f"Scalar {to_text(a)} has a pole at q={value}")
    return a.numer(value) / denominator


# Prime field used by the multipoint rank. p = 1 mod 4 so that i exists.
def _gaussian_prime(start: int) -> int:
    p = nextprime(start)
    while p % 4 != 1:
        p = nextprime(p)
    return p


MODULUS = _gaussian_prime(2**61)
I_MOD = sqrt_mod(-1, MODULUS)


@dataclass(frozen=True)
class ModularPoint:
    """A rational point q0 reduced into the prime field."""

    numerator: int
    denominator: int
    value: int

    @classmethod
    def from_rational(cls, numerator: int, denominator: int) -> "ModularPoint":
        value = numerator * pow(denominator, -1, MODULUS) % MODULUS
        return cls(numerator=numerator, denominator=denominator, value=value)

    @property
    def label(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def _reduce_rational(c: Any) -> int:
    numerator, denominator = int(c.numerator), int(c.denominator)
    if denominator % MODULUS == 0:
        raise PoleError("Coefficient denominator vanishes modulo the prime")
    return numerator * pow(denominator, -1, MODULUS) % MODULUS


def _reduce_polynomial(poly: Any, point: ModularPoint) -> int:
    total = 0
    for (exponent,), coeff in poly.terms():
        c = (_reduce_rational(coeff.x) + _reduce_rational(coeff.y) * I_MOD) % MODULUS
        total = (total + c * pow(point.value, exponent, MODULUS)) % MODULUS
    return total


def eval_mod(a: Scalar, point: ModularPoint) -> int:
    """Evaluate a scalar at q0 and reduce into the prime field."""
    denominator = _reduce_polynomial(a.denom, point)
    if denominator == 0:
        raise PoleError(f"Scalar {to_text(a)} has a pole at q={point.label}")
    numerator = _reduce_polynomial(a.numer, point)
    return numerator * pow(denominator, -1, MODULUS) % MODULUS


def root_of_unity_order(value: Scalar, limit: int = 12) -> int | None:
    """Multiplicative order of a scalar, or None when it is not a small root of unity."""
    power = ONE
    for order in range(1, limit + 1):
        power = power * value
        if power == ONE:
            return order
    return None


# Canonical forms


def _normalised(a: Scalar) -> tuple[Any, Any]:
    lc = a.denom.LC
    return a.numer.quo_ground(lc), a.denom.quo_ground(lc)


def _coefficient_text(c: Any) -> str:
    if not c.y:
        return str(c.x)
    if not c.x:
        return f"{c.y}*i"
    return f"({c.x}+{c.y}*i)"


def _polynomial_text(poly: Any) -> str:
    terms = sorted(poly.terms(), key=lambda term: -term[0][0])
    return " + ".join(f"{_coefficient_text(c)}*q^{e}" for (e,), c in terms)


def to_text(a: Scalar) -> str:
    """Canonical ``num/den`` text with sparse ``c*q^e`` term lists."""
    a = scalar(a)
    if not a:
        return "0"
    numerator, denominator = _normalised(a)
    if denominator == K.ring.one:
        if numerator.is_ground:
            return _coefficient_text(numerator.LC)
        return f"({_polynomial_text(numerator)})"
    return f"({_polynomial_text(numerator)})/({_polynomial_text(denominator)})"


def parse_scalar(text: str) -> Scalar:
    """Read a scalar written in the canonical text form or plain sympy syntax."""
    expr = parse_expr(
        text.strip(),
        local_dict={"q": Q_SYMBOL, "i": SYMPY_I},
        transformations=_PARSE_TRANSFORMS,
    )
    return K.from_expr(expr)


def _polynomial_json(poly: Any) -> list[list[Any]]:
    terms = sorted(poly.terms(), key=lambda term: term[0][0])
    return [[e, str(c.x), str(c.y)] for (e,), c in terms]


def scalar_to_json(a: Scalar) -> dict[str, list[list[Any]]]:
    """Structured form ``{num: [[e, re, im], ...], den: [...]}``."""
    a = scalar(a)
    numerator, denominator = _normalised(a) if a else (K.ring.zero, K.ring.one)
    return {"num": _polynomial_json(numerator), "den": _polynomial_json(denominator)}


# Named sequences


@lru_cache(maxsize=None)
def qint(n: int) -> Scalar:
    """Quantum integer [n]_q = (q^n - q^-n) / (q - q^-1)."""
    if n < 0:
        raise ValueError(f"Quantum integer index must be non-negative, got {n}")
    return (q**n - q ** (-n)) / THETA


@lru_cache(maxsize=None)
def pseq(n: int) -> Scalar:
    """P_0 = 1, P_n = q^n + q^(n-1) + (-1)^(n-1) P_(n-1)."""
    if n < 0:
        raise ValueError(f"P index must be non-negative, got {n}")
    if n == 0:
        return ONE
    return q**n + q ** (n - 1) + (-1) ** (n - 1) * pseq(n - 1)


@lru_cache(maxsize=None)
def qseq(n: int) -> Scalar:
    """Q_0 = 1, Q_n = q^n - q^(n-1) + (-1)^n Q_(n-1)."""
    if n < 0:
        raise ValueError(f"Q index must be non-negative, got {n}")
    if n == 0:
        return ONE
    return q**n - q ** (n - 1) + (-1) ** n * qseq(n - 1)


def _floor_part(n: int) -> Scalar:
    half = n // 2
    return 2 * q ** (2 * half) * (1 - (-(q**-2)) ** (half + 1)) / (1 + q**-2)


def pseq_closed(n: int) -> Scalar:
    return _floor_part(n) + (-1) ** (n + 1) * q**n


def qseq_closed(n: int) -> Scalar:
    return (-1) ** n * _floor_part(n) + (-1) ** (n + 1) * q**n


@lru_cache(maxsize=None)
def aseq(n: int) -> Scalar:
    """a_1 = 1, a_2 = theta/2, a_(n+2) = (theta/2) a_(n+1) + a_n / 4."""
    if n < 1:
        raise ValueError(f"a index must be positive, got {n}")
    if n == 1:
        return ONE
    if n == 2:
        return THETA / 2
    return THETA / 2 * aseq(n - 1) + aseq(n - 2) / 4


def aseq_closed(n: int) -> Scalar:
    return ((q / 2) ** n - (-1 / (2 * q)) ** n) / (THETA_PRIME / 2)


def _exp_coefficients(exponent: list[Scalar], order: int) -> list[Scalar]:
    """Coefficients of exp(s) for a commutative series s with s_0 = 0."""
    if exponent and exponent[0]:
        raise ValueError("exp needs a series with zero constant term")

    def coeff(k: int) -> Scalar:
        return exponent[k] if k < len(exponent) else ZERO

    result = [ONE]
    for n in range(1, order + 1):
        total = ZERO
        for k in range(1, n + 1):
            c = coeff(k)
            if c:
                total += k * c * result[n - k]
        result.append(total / n)
    return result


@lru_cache(maxsize=None)
def rseq(k: int) -> Scalar:
    """R_2k from its coefficient-extraction recursion.

    theta R_2k = C_(2k-2)(theta/2) + C_(2k-2)(theta/2 E) + C_(2k-4)((E-1)/4)
    - C_2k(E), where E = exp(sum_(n<k) theta R_2n u^2n).
    """
    if k < 1:
        raise ValueError(f"R index must be positive, got {k}")
    order = 2 * k
    exponent = [ZERO] * (order + 1)
    for n in range(1, k):
        exponent[2 * n] = THETA * rseq(n)
    e = _exp_coefficients(exponent, order)

    def at(m: int) -> Scalar:
        return e[m] if 0 <= m <= order else ZERO

    total = THETA / 2 if 2 * k - 2 == 0 else ZERO
    total += THETA / 2 * at(2 * k - 2)
    if 2 * k - 4 >= 0:
        total += (at(2 * k - 4) - (ONE if 2 * k - 4 == 0 else ZERO)) / 4
    total -= at(2 * k)
    return total / THETA


def rseq_closed(k: int) -> Scalar:
    """R_4j = 0 and R_(4j+2) = [2j+1]_q / (2^(2j) (2j+1))."""
    if k % 2 == 0:
        return ZERO
    j = (k - 1) // 2
    return qint(2 * j + 1) / (2 ** (2 * j) * (2 * j + 1))


def q_power(n: int) -> Scalar:
    return q**n
