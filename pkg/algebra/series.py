"""Truncated power series in a central variable u with free algebra coefficients.

Products are literal ordered products, so exp, log and arctan are the
noncommutative Taylor sums. Results are exact modulo u^(order+1).
"""

import logging
from collections.abc import Callable, Mapping
from functools import lru_cache
from typing import Any

from algebra.free_algebra import FreeElement, bracket
from algebra.generators import Lh, Lt, M
from algebra.scalars import (
    ALPHA_SQUARED,
    BETA_SQUARED,
    I,
    THETA,
    Scalar,
    aseq,
    rational,
    scalar,
)
from utils.config import settings

logger = logging.getLogger(__name__)

SERIES_NAMES = ("Ltilde", "X", "A", "B", "Aprime", "Bprime")
DERIVED_NAMES = ("Lbar", "Mbar", "Lring")


def _as_element(value: Any) -> FreeElement:
    return value if isinstance(value, FreeElement) else FreeElement.constant(value)


class USeries:
    """sum_k c_k u^k for k <= order."""

    __slots__ = ("order", "_coefficients")

    def __init__(self, coefficients: Mapping[int, Any] | None = None, order: int | None = None):
        self.order = settings.series_order if order is None else order
        if self.order < 0:
            raise ValueError(f"Series order must be non-negative, got {self.order}")
        self._coefficients: dict[int, FreeElement] = {}
        for k, value in (coefficients or {}).items():
            if k < 0:
                raise ValueError(f"Negative exponent {k} in a power series")
            element = _as_element(value)
            if k <= self.order and not element.is_zero():
                self._coefficients[k] = element

    @classmethod
    def constant(cls, value: Any, order: int | None = None) -> "USeries":
        return cls({0: value}, order)

    @classmethod
    def one(cls, order: int | None = None) -> "USeries":
        return cls({0: FreeElement.one()}, order)

    def coefficient(self, k: int) -> FreeElement:
        return self._coefficients.get(k, FreeElement.zero())

    def exponents(self) -> list[int]:
        return sorted(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def truncate(self, order: int) -> "USeries":
        return USeries(self._coefficients, min(order, self.order))

    def __add__(self, other: Any) -> "USeries":
        other = _coerce(other, self.order)
        order = min(self.order, other.order)
        return USeries(
            {k: self.coefficient(k) + other.coefficient(k) for k in range(order + 1)},
            order,
        )

    def __radd__(self, other: Any) -> "USeries":
        return self + other

    def __sub__(self, other: Any) -> "USeries":
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other: Any) -> "USeries":
        return _coerce(other, self.order) - self

    def __neg__(self) -> "USeries":
        return USeries({k: -c for k, c in self._coefficients.items()}, self.order)

    def scale(self, factor: Any) -> "USeries":
        factor = scalar(factor)
        return USeries({k: c.scale(factor) for k, c in self._coefficients.items()}, self.order)

    def _combine(self, other: "USeries", product: Callable[[FreeElement, FreeElement], FreeElement]) -> "USeries":
        order = min(self.order, other.order)
        terms: dict[int, list[FreeElement]] = {}
        for j, a in self._coefficients.items():
            for k, b in other._coefficients.items():
                if j + k <= order:
                    terms.setdefault(j + k, []).append(product(a, b))
        return USeries({k: FreeElement.sum(parts) for k, parts in terms.items()}, order)

    def __mul__(self, other: Any) -> "USeries":
        if isinstance(other, USeries):
            return self._combine(other, lambda a, b: a * b)
        if isinstance(other, FreeElement):
            return self._combine(USeries.constant(other, self.order), lambda a, b: a * b)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "USeries":
        if isinstance(other, FreeElement):
            return USeries.constant(other, self.order) * self
        return self.scale(other)

    def __pow__(self, n: int) -> "USeries":
        if n < 0:
            raise ValueError(f"Negative power {n} of a power series")
        result = USeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def bracket(self, other: "USeries") -> "USeries":
        """Coefficientwise braided bracket; u is central of degree zero."""
        return self._combine(other, bracket)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._coefficients.items())))

    def to_text(self) -> str:
        if not self._coefficients:
            return "0"
        return "\n".join(f"u^{k}: {self._coefficients[k].to_text()}" for k in self.exponents())

    def __repr__(self) -> str:
        return f"<USeries(order={self.order}, exponents={self.exponents()})>"


def _coerce(value: Any, order: int) -> USeries:
    return value if isinstance(value, USeries) else USeries.constant(value, order)


def series_arith(s: USeries, t: USeries, op: str) -> USeries:
    if op == "add":
        return s + t
    if op == "mul":
        return s * t
    if op == "bracket":
        return s.bracket(t)
    raise ValueError(f"Unknown series operation: {op}")


def _require_constant(s: USeries, expected: FreeElement, name: str) -> None:
    if s.coefficient(0) != expected:
        raise ValueError(
            f"{name} needs constant term {expected.to_text()}, got {s.coefficient(0).to_text()}"
        )


def _taylor(z: USeries, weight: Callable[[int], Scalar | None]) -> USeries:
    """sum_n weight(n) z^n for a series z without constant term."""
    result = USeries({}, z.order)
    power = USeries.one(z.order)
    for n in range(z.order + 1):
        w = weight(n)
        if w:
            result = result + power.scale(w)
        power = power * z
        if power.is_zero():
            break
    return result


def series_exp(s: USeries) -> USeries:
    _require_constant(s, FreeElement.zero(), "exp")
    factorial = [1]
    for n in range(1, s.order + 1):
        factorial.append(factorial[-1] * n)
    return _taylor(s, lambda n: rational(1, factorial[n]))


def series_log(s: USeries) -> USeries:
    _require_constant(s, FreeElement.one(), "log")
    z = s - USeries.one(s.order)
    return _taylor(z, lambda n: rational((-1) ** (n + 1), n) if n else None)


def series_arctan(s: USeries) -> USeries:
    _require_constant(s, FreeElement.zero(), "arctan")
    return _taylor(s, lambda n: rational((-1) ** (n // 2), n) if n % 2 else None)


def series_inverse(s: USeries) -> USeries:
    """Inverse of a series whose constant term is a nonzero scalar."""
    c0 = s.coefficient(0)
    if c0.is_zero() or c0.degrees() != {(0, 0)}:
        raise ValueError("inverse needs a nonzero scalar constant term")
    inverse = 1 / c0.constant_term()
    z = s.scale(inverse) - USeries.one(s.order)
    return _taylor(z, lambda n: (-1) ** n).scale(inverse)


def series_scale(s: USeries, factor: Any) -> USeries:
    """Substitute u -> factor * u."""
    factor = scalar(factor)
    return USeries({k: c.scale(factor**k) for k, c in s._coefficients.items()}, s.order)


def series_scale_even(s: USeries, factor_squared: Any) -> USeries:
    """Substitute u -> c u given only c^2; the series must be even."""
    factor_squared = scalar(factor_squared)
    terms = {}
    for k, c in s._coefficients.items():
        if k % 2:
            raise ValueError(f"Even substitution needs an even series, found u^{k}")
        terms[k] = c.scale(factor_squared ** (k // 2))
    return USeries(terms, s.order)


# Named series


def ltilde_series(order: int) -> USeries:
    return USeries({2 * n: Lt(2 * n).scale(THETA) for n in range(order // 2 + 1)}, order)


def x_series(order: int) -> USeries:
    terms = {}
    for n in range(order + 1):
        if 4 * n + 2 > order:
            break
        terms[4 * n + 2] = (M(2 * n + 1) ** 2).scale(2 * THETA)
    return USeries(terms, order)


def a_series(order: int) -> USeries:
    terms = {}
    for n in range(order + 1):
        if 2 * n + 1 > order:
            break
        terms[2 * n + 1] = M(2 * n + 1).scale(THETA * aseq(n + 1))
    return USeries(terms, order)


def b_series(order: int) -> USeries:
    terms = {}
    for n in range(1, order + 1):
        if 2 * n + 1 > order:
            break
        terms[2 * n + 1] = M(2 * n + 1).scale(THETA * aseq(n))
    return USeries(terms, order)


def _twist(s: USeries, shift: int) -> USeries:
    """Coefficient u^k multiplied by i^(k + shift)."""
    return USeries({k: c.scale(I ** ((k + shift) % 4)) for k, c in s._coefficients.items()}, s.order)


def aprime_series(order: int) -> USeries:
    """(1/i) A(iu)."""
    return _twist(a_series(order), -1)


def bprime_series(order: int) -> USeries:
    """i B(iu)."""
    return _twist(b_series(order), 1)


def odd_ltilde_series(order: int) -> USeries:
    """sum theta L~(2n+1) u^(2n+1)."""
    return USeries(
        {k: Lt(k).scale(THETA) for k in range(1, order + 1, 2)},
        order,
    )


def odd_lhat_series(order: int) -> USeries:
    """sum theta L^(2n+1) u^(2n+1)."""
    return USeries(
        {k: Lh(k).scale(THETA) for k in range(1, order + 1, 2)},
        order,
    )


_SERIES = {
    "Ltilde": ltilde_series,
    "X": x_series,
    "A": a_series,
    "B": b_series,
    "Aprime": aprime_series,
    "Bprime": bprime_series,
}


def named_series(name: str, order: int | None = None) -> USeries:
    """One of the named series truncated at ``order``."""
    builder = _SERIES.get(name)
    if builder is None:
        raise ValueError(f"Unknown series '{name}'; expected one of {list(SERIES_NAMES)}")
    return builder(settings.series_order if order is None else order)


# Derived elements


@lru_cache(maxsize=None)
def bar_L(n: int) -> FreeElement:  # noqa: N802
    """u^n coefficient of (1/theta) log L~(u)."""
    if n < 2 or n % 2:
        raise ValueError(f"bar_L needs an even index >= 2, got {n}")
    return series_log(ltilde_series(n)).coefficient(n).scale(1 / THETA)


@lru_cache(maxsize=None)
def overline_M_squared(n: int) -> FreeElement:  # noqa: N802
    """u^(2n) coefficient of arctan(X(u)) / (2 theta), for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"overline_M_squared needs an odd index, got {n}")
    return series_arctan(x_series(2 * n)).coefficient(2 * n).scale(1 / (2 * THETA))


def _half_log_square(order: int, factor_squared: Scalar) -> USeries:
    x = series_scale_even(x_series(order), factor_squared)
    return series_log(USeries.one(order) + x * x).scale(rational(1, 2))


@lru_cache(maxsize=None)
def ring_L(n: int) -> FreeElement:  # noqa: N802
    """u^n coefficient of the corrected log series, n a multiple of 4."""
    if n < 4 or n % 4:
        raise ValueError(f"ring_L needs a positive multiple of 4, got {n}")
    correction = _half_log_square(n, ALPHA_SQUARED) + _half_log_square(n, BETA_SQUARED)
    return bar_L(n) + correction.coefficient(n).scale(1 / (2 * THETA))


def derived_element(name: str, n: int) -> FreeElement:
    if name == "Lbar":
        return bar_L(n)
    if name == "Mbar":
        return overline_M_squared(n)
    if name == "Lring":
        return ring_L(n)
    raise ValueError(f"Unknown derived element '{name}'; expected one of {list(DERIVED_NAMES)}")
