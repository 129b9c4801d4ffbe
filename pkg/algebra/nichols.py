"""Computation in the Nichols algebra B(V) through skew-derivation pairings.

An element of T(V) vanishes in B(V) exactly when all iterated right
derivatives down to degree zero vanish. The scalars obtained that way are the
element's dual coordinates; their span at a fixed degree has the dimension of
the Nichols algebra component.
"""

import logging
import random
import threading
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.polys.domains import GF, FractionField, PolynomialRing
from sympy.polys.matrices import DomainMatrix

from algebra.free_algebra import (
    LETTERS,
    Degree,
    FreeElement,
    TensorElement,
    Word,
    bracket,
    diff_right,
    letter,
    multiply,
    word_degree,
    words_of_degree,
)
from algebra.scalars import (
    K,
    MODULUS,
    ModularPoint,
    PoleError,
    Scalar,
    eval_mod,
)
from utils.config import RANK_METHODS, settings

logger = logging.getLogger(__name__)

Coordinates = dict[Word, Scalar]

FRACTION_DOMAIN = FractionField(K)
POLYNOMIAL_DOMAIN = PolynomialRing(K.ring)
MODULAR_DOMAIN = GF(MODULUS)

POINT_BOUND = 997


def draw_point(rng: random.Random) -> ModularPoint:
    """A random rational q0 = +-n/d with n, d <= 997 and q0 != +-1."""
    while True:
        numerator = rng.randint(1, POINT_BOUND)
        denominator = rng.randint(1, POINT_BOUND)
        if numerator == denominator:
            continue
        sign = rng.choice((1, -1))
        return ModularPoint.from_rational(sign * numerator, denominator)


def serre_elements() -> tuple[FreeElement, FreeElement]:
    """The quantum Serre elements [X1, X2] and [Y2, Y1]."""
    x1, x2 = letter(1), letter(2)
    x_two = bracket(x1, bracket(x1, x2))
    y_two = bracket(bracket(x1, x2), x2)
    return bracket(x1, x_two), bracket(y_two, x2)


class ModularEchelon:
    """Row echelon form of sparse vectors reduced at one rational point."""

    def __init__(self, point: ModularPoint):
        self.point = point
        self.rows: list[tuple[Word, dict[Word, int]]] = []

    def _evaluate(self, vector: Coordinates) -> dict[Word, int]:
        values = {}
        for key, value in vector.items():
            reduced = eval_mod(value, self.point)
            if reduced:
                values[key] = reduced
        return values

    def reduce(self, vector: Coordinates) -> dict[Word, int]:
        residual = self._evaluate(vector)
        for pivot, row in self.rows:
            factor = residual.get(pivot)
            if not factor:
                continue
            for key, value in row.items():
                updated = (residual.get(key, 0) - factor * value) % MODULUS
                if updated:
                    residual[key] = updated
                else:
                    residual.pop(key, None)
        return residual

    def add(self, vector: Coordinates) -> Word | None:
        """Insert a vector; return its pivot, or None if it was dependent."""
        residual = self.reduce(vector)
        if not residual:
            return None
        pivot = min(residual)
        inverse = pow(residual[pivot], -1, MODULUS)
        self.rows.append((pivot, {k: v * inverse % MODULUS for k, v in residual.items()}))
        return pivot

    @property
    def rank(self) -> int:
        return len(self.rows)


class ExactEchelon:
    """Row echelon form of sparse vectors over Q(i)(q)."""

    def __init__(self):
        self.rows: list[tuple[Word, Coordinates]] = []

    def reduce(self, vector: Coordinates) -> Coordinates:
        residual = {k: v for k, v in vector.items() if v}
        for pivot, row in self.rows:
            factor = residual.get(pivot)
            if not factor:
                continue
            for key, value in row.items():
                updated = residual.get(key, K.zero) - factor * value
                if updated:
                    residual[key] = updated
                else:
                    residual.pop(key, None)
        return residual

    def add(self, vector: Coordinates) -> Word | None:
        residual = self.reduce(vector)
        if not residual:
            return None
        pivot = min(residual)
        inverse = 1 / residual[pivot]
        self.rows.append((pivot, {k: v * inverse for k, v in residual.items()}))
        return pivot

    @property
    def rank(self) -> int:
        return len(self.rows)


class SpanTracker:
    """Incremental linear independence test for coordinate vectors.

    The exact method works over Q(i)(q). The multipoint method keeps one
    echelon per rational point; a vector counts as new when it is independent
    at some point, which never overstates the generic rank.
    """

    def __init__(self, method: str | None = None, points: int | None = None, seed: int | None = None):
        self.method = method or settings.rank_method
        if self.method not in RANK_METHODS:
            raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
        self._rng = random.Random(settings.rank_seed if seed is None else seed)
        self._history: list[Coordinates] = []
        self._exact = ExactEchelon() if self.method == "exact" else None
        count = points or settings.rank_points
        self._modular: list[ModularEchelon] = (
            [] if self._exact else [ModularEchelon(draw_point(self._rng)) for _ in range(count)]
        )

    def _rebuild(self, index: int) -> None:
        while True:
            echelon = ModularEchelon(draw_point(self._rng))
            try:
                for vector in self._history:
                    echelon.add(vector)
            except PoleError:
                logger.debug("Pole while rebuilding echelon, drawing a new point")
                continue
            self._modular[index] = echelon
            return

    def _guarded(self, index: int, action):
        while True:
            try:
                return action(self._modular[index])
            except PoleError:
                logger.debug(f"Point {self._modular[index].point.label} hit a pole, redrawing")
                self._rebuild(index)

    def contains(self, vector: Coordinates) -> bool:
        if self._exact is not None:
            return not self._exact.reduce(vector)
        return all(
            not self._guarded(i, lambda echelon: echelon.reduce(vector))
            for i in range(len(self._modular))
        )

    def add(self, vector: Coordinates) -> bool:
        """Insert a vector and report whether it enlarged the span."""
        if self._exact is not None:
            return self._exact.add(vector) is not None
        before = self.rank
        for i in range(len(self._modular)):
            self._guarded(i, lambda echelon: echelon.add(vector))
        self._history.append(vector)
        return self.rank > before

    @property
    def rank(self) -> int:
        if self._exact is not None:
            return self._exact.rank
        return max((echelon.rank for echelon in self._modular), default=0)


@dataclass
class DimensionResult:
    """Rank of the Gram matrix at one degree."""

    degree: Degree
    rank: int
    words: int
    method: str
    points: list[str] = field(default_factory=list)
    certified: bool = False

    @property
    def lower_bound_only(self) -> bool:
        return not self.certified


def _as_polynomial(value: Scalar):
    if value.denom.is_ground:
        return value.numer.quo_ground(value.denom.LC)
    raise ValueError("Row still has a non-constant denominator after clearing")


def exact_rank(vectors: Sequence[Coordinates]) -> int:
    """Rank over Q(i)(q) by fraction-free elimination in Q(i)[q]."""
    columns = sorted({key for vector in vectors for key in vector})
    if not vectors or not columns:
        return 0
    rows = []
    for vector in vectors:
        common = K.ring.one
        for value in vector.values():
            common = common.lcm(value.denom)
        rows.append(
            [
                _as_polynomial(vector[key] * common) if key in vector else K.ring.zero
                for key in columns
            ]
        )
    matrix = DomainMatrix(rows, (len(rows), len(columns)), POLYNOMIAL_DOMAIN)
    _, _, pivots = matrix.rref_den(method="FF")
    return len(pivots)


def modular_rank(vectors: Sequence[Coordinates], point: ModularPoint) -> int:
    """Rank of the vectors evaluated at q0 over the prime field."""
    columns = sorted({key for vector in vectors for key in vector})
    if not vectors or not columns:
        return 0
    rows = [
        [MODULAR_DOMAIN(eval_mod(vector[key], point)) if key in vector else MODULAR_DOMAIN.zero for key in columns]
        for vector in vectors
    ]
    return DomainMatrix(rows, (len(rows), len(columns)), MODULAR_DOMAIN).rank()


class NicholsKernel:
    """Zero tests, dual coordinates and graded dimensions in B(V)."""

    def __init__(
        self,
        rank_method: str | None = None,
        rank_points: int | None = None,
        rank_seed: int | None = None,
    ):
        self.rank_method = rank_method or settings.rank_method
        if self.rank_method not in RANK_METHODS:
            raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
        self.rank_points = rank_points or settings.rank_points
        self.rank_seed = settings.rank_seed if rank_seed is None else rank_seed
        self._lock = threading.Lock()
        self._word_coordinates: dict[Word, Coordinates] = {(): {(): K.one}}
        self._dimensions: dict[tuple[Degree, str], DimensionResult] = {}
        self._coordinates = lru_cache(maxsize=settings.cache_size)(self._compute_coordinates)

    def configure(
        self,
        rank_method: str | None = None,
        rank_points: int | None = None,
        rank_seed: int | None = None,
    ) -> None:
        """Switch the rank parameters used by later calls."""
        if rank_method is not None:
            if rank_method not in RANK_METHODS:
                raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
            self.rank_method = rank_method
        if rank_points is not None:
            self.rank_points = rank_points
        if rank_seed is not None:
            self.rank_seed = rank_seed
        with self._lock:
            self._dimensions.clear()

    def span_tracker(self, method: str | None = None) -> SpanTracker:
        return SpanTracker(method or self.rank_method, self.rank_points, self.rank_seed)

    # Pairing and coordinates

    def pairing(self, a: FreeElement, word: Word) -> Scalar:
        """Apply the right derivations of ``word``, last letter first."""
        current = a.component(word_degree(word))
        for i in reversed(word):
            if current.is_zero():
                return K.zero
            current = diff_right(i, current)
        return current.constant_term()

    def _compute_coordinates(self, component: FreeElement) -> Coordinates:
        frontier: dict[Word, FreeElement] = {(): component}
        for _ in range(component.max_length()):
            step: dict[Word, FreeElement] = {}
            for suffix, current in frontier.items():
                for i in LETTERS:
                    derived = diff_right(i, current)
                    if not derived.is_zero():
                        step[(i,) + suffix] = derived
            frontier = step
            if not frontier:
                return {}
        return {w: e.constant_term() for w, e in frontier.items() if e.constant_term()}

    def dual_coordinates(self, a: FreeElement) -> Coordinates:
        """Sparse map word -> pairing(a, word), over all homogeneous components."""
        coordinates: Coordinates = {}
        for component in a.components().values():
            coordinates.update(self._coordinates(component))
        return coordinates

    def word_coordinates(self, word: Word) -> Coordinates:
        """Gram row of a word, memoised through its right derivatives."""
        cached = self._word_coordinates.get(word)
        if cached is not None:
            return cached
        row: Coordinates = {}
        for i in LETTERS:
            for v, c in diff_right(i, FreeElement.from_word(word)).items():
                for w, value in self.word_coordinates(v).items():
                    key = w + (i,)
                    updated = row.get(key, K.zero) + c * value
                    if updated:
                        row[key] = updated
                    else:
                        row.pop(key, None)
        with self._lock:
            self._word_coordinates[word] = row
        return row

    # Zero tests

    def is_zero(self, a: FreeElement) -> bool:
        return all(not self._coordinates(part) for part in a.components().values())

    def equal(self, a: FreeElement, b: FreeElement) -> bool:
        return self.is_zero(a - b)

    def tensor_is_zero(self, t: TensorElement) -> bool:
        """Leg-wise zero test of a tensor in B(V) (x) B(V)."""
        for part in t.bidegrees().values():
            rows: dict[Word, dict[Word, Scalar]] = {}
            for (left, right), c in part.items():
                rows.setdefault(left, {})[right] = c
            columns: dict[Word, dict[Word, Scalar]] = {}
            for left, right_terms in rows.items():
                for w, value in self.dual_coordinates(FreeElement(right_terms)).items():
                    columns.setdefault(w, {})[left] = value
            for left_terms in columns.values():
                if not self.is_zero(FreeElement(left_terms)):
                    return False
        return True

    def tensor_equal(self, s: TensorElement, t: TensorElement) -> bool:
        return self.tensor_is_zero(s - t)

    def tensor_coordinates(self, t: TensorElement) -> dict[tuple[Word, Word], Scalar]:
        """Leg-wise dual coordinates of a tensor, keyed by (left word, right word)."""
        coordinates: dict[tuple[Word, Word], Scalar] = {}
        for part in t.bidegrees().values():
            rows: dict[Word, dict[Word, Scalar]] = {}
            for (left, right), c in part.items():
                rows.setdefault(left, {})[right] = c
            columns: dict[Word, dict[Word, Scalar]] = {}
            for left, right_terms in rows.items():
                for w, value in self.dual_coordinates(FreeElement(right_terms)).items():
                    columns.setdefault(w, {})[left] = value
            for w, left_terms in columns.items():
                for v, value in self.dual_coordinates(FreeElement(left_terms)).items():
                    coordinates[(v, w)] = value
        return coordinates

    # Spans

    def in_span(self, a: FreeElement, elements: Sequence[FreeElement]) -> bool:
        return self.solve_in_span(a, elements) is not None

    def solve_in_span(self, a: FreeElement, elements: Sequence[FreeElement]) -> list[Scalar] | None:
        """Coefficients c with a = sum c_j elements[j] in B(V), or None.

        Pivot rows and columns are picked at a random point, the square
        system is solved exactly, and the full residual is checked exactly.
        """
        target = self.dual_coordinates(a)
        vectors = [self.dual_coordinates(e) for e in elements]
        if not target:
            return [K.zero] * len(elements)
        rng = random.Random(self.rank_seed)
        for _ in range(max(self.rank_points, 1)):
            point = draw_point(rng)
            echelon = ModularEchelon(point)
            chosen: list[int] = []
            pivots: list[Word] = []
            try:
                for index, vector in enumerate(vectors):
                    pivot = echelon.add(vector)
                    if pivot is not None:
                        chosen.append(index)
                        pivots.append(pivot)
                if echelon.reduce(target):
                    return None
            except PoleError:
                continue
            solution = self._exact_solution(target, vectors, chosen, pivots)
            if solution is not None:
                return solution
            logger.debug(f"Exact residual nonzero after pivoting at q={point.label}")
        return None

    def solve_by_pairing(self, a: FreeElement, elements: Sequence[FreeElement]) -> list[Scalar] | None:
        """Coefficients c with a = sum c_j elements[j] in B(V), or None.

        Pairs the elements with words of their common degree, in random order,
        until the pairing matrix reaches full rank at a random point. Only that
        square system is solved exactly, and a single zero test of the residual
        confirms it, so no element needs its full dual coordinates.
        """
        if not elements:
            return [] if self.is_zero(a) else None
        degree = elements[0].degree()
        if degree is None or a.degrees() - {degree} or any(e.degree() != degree for e in elements):
            return self.solve_in_span(a, elements)

        tracked = list(elements) + [a]
        target = len(elements)
        memo: dict[tuple[int, Word], FreeElement] = {}

        def derived(index: int, suffix: Word) -> FreeElement:
            cached = memo.get((index, suffix))
            if cached is None:
                if not suffix:
                    cached = tracked[index]
                else:
                    parent = derived(index, suffix[1:])
                    cached = parent if parent.is_zero() else diff_right(suffix[0], parent)
                memo[(index, suffix)] = cached
            return cached

        rng = random.Random(self.rank_seed)
        point = draw_point(rng)
        words = words_of_degree(degree)
        rng.shuffle(words)
        echelon = ModularEchelon(point)
        rows: list[dict[int, Scalar]] = []
        columns: list[int] = []
        for word in words:
            row = {j: value for j in range(len(elements)) if (value := derived(j, word).constant_term())}
            try:
                pivot = echelon.add(row)
            except PoleError:
                continue
            if pivot is None:
                continue
            rows.append(row | {target: derived(target, word).constant_term()})
            columns.append(pivot)
            if echelon.rank == len(elements):
                break

        coefficients = [K.zero] * len(elements)
        if columns:
            size = len(columns)
            matrix = DomainMatrix(
                [[row.get(j, K.zero) for j in columns] for row in rows], (size, size), FRACTION_DOMAIN
            )
            rhs = DomainMatrix([[row[target]] for row in rows], (size, 1), FRACTION_DOMAIN)
            for value, j in zip(matrix.lu_solve(rhs).to_list(), columns):
                coefficients[j] = value[0]
        residual = a - FreeElement.sum(e.scale(c) for e, c in zip(elements, coefficients) if c)
        if self.is_zero(residual):
            return coefficients
        if echelon.rank < len(elements):
            logger.debug(f"Pairing rank {echelon.rank} of {len(elements)} at q={point.label}")
            return self.solve_in_span(a, elements)
        return None

    def _exact_solution(
        self,
        target: Coordinates,
        vectors: list[Coordinates],
        chosen: list[int],
        pivots: list[Word],
    ) -> list[Scalar] | None:
        coefficients = [K.zero] * len(vectors)
        if chosen:
            size = len(chosen)
            matrix = DomainMatrix(
                [[vectors[j].get(p, K.zero) for j in chosen] for p in pivots],
                (size, size),
                FRACTION_DOMAIN,
            )
            rhs = DomainMatrix([[target.get(p, K.zero)] for p in pivots], (size, 1), FRACTION_DOMAIN)
            solution = matrix.lu_solve(rhs).to_list()
            for row, j in zip(solution, chosen):
                coefficients[j] = row[0]
        residual = dict(target)
        for j, c in enumerate(coefficients):
            if not c:
                continue
            for key, value in vectors[j].items():
                updated = residual.get(key, K.zero) - c * value
                if updated:
                    residual[key] = updated
                else:
                    residual.pop(key, None)
        return None if residual else coefficients

    # Dimensions

    def rank_of(self, vectors: Sequence[Coordinates], method: str | None = None) -> tuple[int, list[str]]:
        """Rank of coordinate vectors with the requested method."""
        method = method or self.rank_method
        if method == "exact":
            return exact_rank(vectors), []
        rng = random.Random(self.rank_seed)
        best, labels = 0, []
        while len(labels) < self.rank_points:
            point = draw_point(rng)
            try:
                rank = modular_rank(vectors, point)
            except PoleError:
                logger.debug(f"Gram entry has a pole at q={point.label}, redrawing")
                continue
            labels.append(point.label)
            best = max(best, rank)
        return best, labels

    def dimension_result(self, degree: Degree, method: str | None = None) -> DimensionResult:
        method = method or self.rank_method
        if method not in RANK_METHODS:
            raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
        key = (tuple(degree), method)
        cached = self._dimensions.get(key)
        if cached is not None:
            return cached
        words = words_of_degree(key[0])
        rows = [self.word_coordinates(w) for w in words]
        rank, points = self.rank_of(rows, method)
        result = DimensionResult(
            degree=key[0],
            rank=rank,
            words=len(words),
            method=method,
            points=points,
            certified=method == "exact",
        )
        logger.debug(f"dim B{key[0]} = {rank} of {len(words)} words ({method})")
        with self._lock:
            self._dimensions[key] = result
        return result

    def dimension(self, degree: Degree, method: str | None = None) -> int:
        """Rank of the Gram matrix at a degree."""
        return self.dimension_result(degree, method).rank

    def serre_quotient_dimension(self, degree: Degree, method: str | None = None) -> int:
        """dim T(V)_degree minus the rank of u r v over the Serre elements r."""
        degree = tuple(degree)
        words = words_of_degree(degree)
        vectors: list[Coordinates] = []
        for relation in serre_elements():
            rest = (degree[0] - relation.degree()[0], degree[1] - relation.degree()[1])
            if rest[0] < 0 or rest[1] < 0:
                continue
            for ones in range(rest[0] + 1):
                for twos in range(rest[1] + 1):
                    tail = (rest[0] - ones, rest[1] - twos)
                    for u in words_of_degree((ones, twos)):
                        left = multiply(FreeElement.from_word(u), relation)
                        for v in words_of_degree(tail):
                            product = multiply(left, FreeElement.from_word(v))
                            vectors.append(dict(product.items()))
        if not vectors:
            return len(words)
        rank, _ = self.rank_of(vectors, method)
        return len(words) - rank


# Global kernel instance
nichols_kernel = NicholsKernel()
