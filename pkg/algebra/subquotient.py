"""The braided Hopf subquotient K>=1 / K>1, computed inside B(V) coordinates.

For x in K>=1 of balanced degree (n, n) the induced coproduct keeps exactly
the terms of Delta(x) whose left leg has balanced degree (k, k).
"""

import logging
from collections.abc import Sequence

from algebra.free_algebra import (
    Degree,
    FreeElement,
    TensorElement,
    coproduct,
    tensor_multiply,
)
from algebra.generators import L, Lp, M, X
from algebra.nichols import NicholsKernel, nichols_kernel
from algebra.scalars import THETA, Scalar, q, qint

logger = logging.getLogger(__name__)


def _balanced_level(a: FreeElement) -> int:
    degree = a.degree()
    if degree is None or degree[0] != degree[1]:
        raise ValueError(f"Expected a homogeneous element of balanced degree, got {a.degrees()}")
    return degree[0]


def _left_degrees(total: Degree) -> list[Degree]:
    return [(i, j) for i in range(total[0] + 1) for j in range(total[1] + 1)]


def balanced_projection(t: TensorElement) -> TensorElement:
    """Keep the terms whose left leg has balanced degree."""
    return t.filter_left(lambda d: d[0] == d[1])


def in_k_ge1(a: FreeElement, kernel: NicholsKernel | None = None) -> bool:
    """True when every coproduct term with left degree a1 < a2 vanishes in B(V)."""
    kernel = kernel or nichols_kernel
    for degree, component in a.components().items():
        for left in _left_degrees(degree):
            if left[0] >= left[1]:
                continue
            if not kernel.tensor_is_zero(coproduct(component, left_degree=left)):
                logger.debug(f"Coproduct term with left degree {left} survives")
                return False
    return True


def subquotient_coproduct(
    a: FreeElement,
    kernel: NicholsKernel | None = None,
    check_membership: bool = True,
) -> TensorElement:
    """Balanced-left-leg part of Delta(a) for a in K>=1 of degree (n, n)."""
    kernel = kernel or nichols_kernel
    n = _balanced_level(a)
    if check_membership and not in_k_ge1(a, kernel):
        raise ValueError("Element does not lie in K>=1")
    return TensorElement.sum(coproduct(a, left_degree=(k, k)) for k in range(n + 1))


def projection_is_multiplicative(a: FreeElement, b: FreeElement, kernel: NicholsKernel | None = None) -> bool:
    """proj Delta(ab) = proj Delta(a) proj Delta(b) in B(V) (x) B(V), for a, b in K>=1."""
    kernel = kernel or nichols_kernel
    lhs = balanced_projection(coproduct(a * b))
    rhs = tensor_multiply(balanced_projection(coproduct(a)), balanced_projection(coproduct(b)))
    return kernel.tensor_equal(lhs, rhs)


def intermediate_coproduct(a: FreeElement) -> TensorElement:
    """Balanced terms of Delta(a) other than a (x) 1 and 1 (x) a."""
    n = _balanced_level(a)
    return TensorElement.sum(coproduct(a, left_degree=(k, k)) for k in range(1, n))


def is_primitive(a: FreeElement, kernel: NicholsKernel | None = None) -> bool:
    """Delta(a) - a (x) 1 - 1 (x) a vanishes in the subquotient."""
    kernel = kernel or nichols_kernel
    n = _balanced_level(a)
    return all(kernel.tensor_is_zero(coproduct(a, left_degree=(k, k))) for k in range(1, n))


def primitive_space_dimension(spanning: Sequence[FreeElement], kernel: NicholsKernel | None = None) -> int:
    """Dimension of the primitives inside span(spanning), all of one balanced degree."""
    kernel = kernel or nichols_kernel
    elements = [kernel.dual_coordinates(s) for s in spanning]
    images = [kernel.tensor_coordinates(intermediate_coproduct(s)) for s in spanning]
    span_rank, _ = kernel.rank_of(elements)
    image_rank, _ = kernel.rank_of(images)
    return span_rank - image_rank


# Coproduct formulas in the subquotient


def _pure(left: FreeElement, right: FreeElement, coeff=1) -> TensorElement:
    return TensorElement.pure(left, right, coeff)


def _leg(primed: bool, k: int) -> FreeElement:
    return Lp(k) if primed else L(k)


def cor25_rhs(n: int, primed: bool = False) -> TensorElement:
    """Displayed coproduct of L_n (or L'_n) in the subquotient.

    Left legs alternate between L and L' by parity, right legs are L_j
    (L'_j for the primed family); L_0 = L'_0 = 1/theta closes both ends.
    """
    if n < 1:
        raise ValueError(f"Coproduct formula needs n >= 1, got {n}")
    terms = []
    for j in range(n + 1):
        m = n - j
        if n % 2 == 0:
            left_primed = (m % 2 == 1) != primed
            sign = -1 if j % 2 else 1
        else:
            left_primed = (m % 2 == 0) != primed
            sign = 1
        terms.append(_pure(_leg(left_primed, m), _leg(primed, j), sign * THETA))
    return TensorElement.sum(terms)


def coproduct_formula(name: str) -> TensorElement:
    """Subquotient coproducts of L1^2, M3 and M5."""
    l1 = L(1)
    l1_sq = l1 * l1
    one = FreeElement.one()
    if name == "L1^2":
        return _pure(l1_sq, one) + _pure(one, l1_sq)
    if name == "M3":
        m3 = M(3)
        return TensorElement.sum(
            [
                _pure(m3, one),
                _pure(l1_sq, l1, 2 * THETA),
                _pure(l1, l1_sq, -2 * THETA),
                _pure(one, m3),
            ]
        )
    if name == "M5":
        m3, m5 = M(3), M(5)
        l1_cube = l1_sq * l1
        return TensorElement.sum(
            [
                _pure(m5, one),
                _pure(l1_cube, l1_sq, -4 * THETA**2),
                _pure(l1_sq, m3, 2 * THETA),
                _pure(m3, l1_sq, -2 * THETA),
                _pure(l1_sq, l1_cube, -4 * THETA**2),
                _pure(one, m5),
            ]
        )
    raise ValueError(f"No coproduct formula for '{name}'")


def coproduct_formula_element(name: str) -> FreeElement:
    if name == "L1^2":
        return L(1) * L(1)
    if name == "M3":
        return M(3)
    if name == "M5":
        return M(5)
    raise ValueError(f"No coproduct formula for '{name}'")


def verify_coproduct_formulas(n_max: int, kernel: NicholsKernel | None = None) -> list[dict]:
    """Compare computed subquotient coproducts of L_n, L'_n with the displays."""
    kernel = kernel or nichols_kernel
    report = []
    for n in range(1, n_max + 1):
        for primed in (False, True):
            element = Lp(n) if primed else L(n)
            computed = subquotient_coproduct(element, kernel, check_membership=False)
            holds = kernel.tensor_equal(computed, cor25_rhs(n, primed))
            label = f"L{n}'" if primed else f"L{n}"
            logger.debug(f"Coproduct of {label}: {'matches' if holds else 'differs'}")
            report.append({"element": label, "n": n, "primed": primed, "holds": holds})
    return report


# M-generated subalgebra and tensor membership


def _odd_compositions(k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    results = []
    for first in range(1, k + 1, 2):
        for rest in _odd_compositions(k - first):
            results.append((first,) + rest)
    return results


def m_monomials(k: int) -> list[FreeElement]:
    """Products M_i1 ... M_ir with i1 + ... + ir = k, spanning the M-subalgebra at k delta."""
    results = []
    for composition in _odd_compositions(k):
        element = FreeElement.one()
        for index in composition:
            element = element * M(index)
        results.append(element)
    return results


def tensor_in_product_span(
    t: TensorElement,
    left_spanning: Sequence[FreeElement],
    right_spanning: Sequence[FreeElement],
    kernel: NicholsKernel | None = None,
) -> bool:
    """t lies in span(left) (x) span(right) in B(V) (x) B(V).

    A finite tensor is in A (x) B iff each slice with a fixed right coordinate
    lies in A and each slice with a fixed left coordinate lies in B.
    """
    kernel = kernel or nichols_kernel
    coordinates = kernel.tensor_coordinates(t)
    if not coordinates:
        return True
    left_tracker = kernel.span_tracker()
    for element in left_spanning:
        left_tracker.add(kernel.dual_coordinates(element))
    right_tracker = kernel.span_tracker()
    for element in right_spanning:
        right_tracker.add(kernel.dual_coordinates(element))
    by_right: dict = {}
    by_left: dict = {}
    for (v, w), value in coordinates.items():
        by_right.setdefault(w, {})[v] = value
        by_left.setdefault(v, {})[w] = value
    return all(left_tracker.contains(vec) for vec in by_right.values()) and all(
        right_tracker.contains(vec) for vec in by_left.values()
    )


def coproduct_residual_in_m_subalgebra(a: FreeElement, kernel: NicholsKernel | None = None) -> bool:
    """Every intermediate balanced term of Delta(a) lies in O (x) O."""
    kernel = kernel or nichols_kernel
    n = _balanced_level(a)
    for k in range(1, n):
        part = coproduct(a, left_degree=(k, k))
        if not tensor_in_product_span(part, m_monomials(k), m_monomials(n - k), kernel):
            logger.debug(f"Left degree ({k},{k}) leaves the M-generated subalgebra")
            return False
    return True


# Leading coefficients on X_m


def imaginary_monomials(k: int) -> list[FreeElement]:
    """Decreasing products of imaginary root vectors at k delta.

    M_1 > M_3 > ... > L_2 > L_4 > ...; each M_j carries exponent at most 1
    next to its square M_j^2, which is a root vector of its own.
    """
    generators: list[tuple[int, FreeElement, int | None]] = []
    for j in range(1, k + 1, 2):
        m = M(j)
        if 2 * j <= k:
            generators.append((2 * j, m * m, None))
        generators.append((j, m, 1))
    for j in range(2, k + 1, 2):
        generators.append((j, L(j), None))
    results = []

    def extend(index: int, remaining: int, element: FreeElement) -> None:
        if remaining == 0:
            results.append(element)
            return
        if index == len(generators):
            return
        size, generator, bound = generators[index]
        most = remaining // size
        if bound is not None:
            most = min(most, bound)
        for exponent in range(most, -1, -1):
            extend(index + 1, remaining - exponent * size, element * generator**exponent if exponent else element)

    extend(0, k, FreeElement.one())
    return results


def x_coefficient(a: FreeElement, m: int, kernel: NicholsKernel | None = None) -> Scalar | None:
    """Coefficient of X_m when a = sum (imaginary monomial) X_(m-j).

    Returns None when a is not in that span (nonzero exact residual).
    """
    kernel = kernel or nichols_kernel
    basis = [X(m)]
    for j in range(1, m):
        for monomial in imaginary_monomials(j):
            basis.append(monomial * X(m - j))
    coefficients = kernel.solve_by_pairing(a, basis)
    if coefficients is None:
        return None
    return coefficients[0]


def mbar_leading_coefficient(n: int) -> Scalar:
    """(-1)^n 2^(2n) [2n+1]_q / (2n+1)."""
    return (-1) ** n * 2 ** (2 * n) * qint(2 * n + 1) / (2 * n + 1)


def lring_leading_coefficient(n: int) -> Scalar:
    """[4n]_q / (4n)."""
    return qint(4 * n) / (4 * n)


def lbar_leading_coefficient(n: int) -> Scalar:
    """(q^2n + (-1)^n)(q^n + (-1)^(n+1)) / (n q^(n-1) (q^2 - 1))."""
    return (q ** (2 * n) + (-1) ** n) * (q**n + (-1) ** (n + 1)) / (n * q ** (n - 1) * (q**2 - 1))
