"""Lyndon words, super-letters, root vectors and the PBW basis of B(V).

Words compare as Python tuples over x1 < x2, so a proper prefix is smaller
than the word it starts. PBW monomials are products of root vectors in
decreasing word order with exponents below the root's height.
"""

import logging
import threading
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import gcd

from algebra.free_algebra import (
    Degree,
    FreeElement,
    Word,
    bracket,
    chi,
    letter,
    multiply,
    word_degree,
    words_of_degree,
)
from algebra.nichols import DimensionResult, NicholsKernel, nichols_kernel
from algebra.scalars import Scalar, root_of_unity_order
from utils.config import HEIGHT_CONVENTIONS, settings

logger = logging.getLogger(__name__)

__all__ = [
    "LyndonWord",
    "PBWMonomial",
    "RootDatum",
    "RootSystem",
    "RootVector",
    "is_lyndon",
    "lyndon_words",
    "lyndon_words_brute",
    "predicted_multiplicity",
    "predicted_pbw_dimension",
    "root_system",
    "root_vector_candidates",
    "shirshov",
    "shirshov_brute",
    "superletter",
    "words_of_degree",
]


def is_lyndon(word: Word) -> bool:
    """A nonempty word strictly smaller than each of its proper suffixes."""
    return bool(word) and all(word < word[k:] for k in range(1, len(word)))


@lru_cache(maxsize=None)
def _duval(length: int) -> tuple[Word, ...]:
    """All Lyndon words over {1, 2} of length <= ``length``, lexicographically."""
    words = []
    current = [0]
    while current:
        current[-1] += 1
        words.append(tuple(current))
        period = len(current)
        while len(current) < length:
            current.append(current[-period])
        while current and current[-1] == 2:
            current.pop()
    return tuple(words)


def shirshov(word: Word) -> tuple[Word, Word]:
    """Split u = vw with w the longest proper Lyndon suffix (so v is shortest)."""
    if len(word) < 2:
        raise ValueError(f"Shirshov decomposition needs a word of length >= 2, got {word}")
    for k in range(1, len(word)):
        if is_lyndon(word[k:]):
            return word[:k], word[k:]
    raise ValueError(f"{word} has no Lyndon suffix")


def shirshov_brute(word: Word) -> tuple[Word, Word]:
    """Minimal-length v with u = vw and both factors Lyndon."""
    for k in range(1, len(word)):
        if is_lyndon(word[:k]) and is_lyndon(word[k:]):
            return word[:k], word[k:]
    raise ValueError(f"{word} has no Lyndon factorisation into two parts")


@dataclass(frozen=True)
class LyndonWord:
    word: Word
    split: int | None

    @classmethod
    def from_word(cls, word: Word) -> "LyndonWord":
        if not is_lyndon(word):
            raise ValueError(f"{word} is not a Lyndon word")
        split = len(shirshov(word)[0]) if len(word) > 1 else None
        return cls(word=word, split=split)

    @property
    def degree(self) -> Degree:
        return word_degree(self.word)


def lyndon_words(degree: Degree) -> list[LyndonWord]:
    """All Lyndon words of the given degree in increasing order."""
    length = degree[0] + degree[1]
    if length == 0:
        return []
    return [
        LyndonWord.from_word(w)
        for w in _duval(length)
        if len(w) == length and word_degree(w) == tuple(degree)
    ]


def lyndon_words_brute(degree: Degree) -> list[Word]:
    return [w for w in words_of_degree(degree) if is_lyndon(w)]


@lru_cache(maxsize=None)
def superletter(word: Word) -> FreeElement:
    """[u] = u for a letter and [[v],[w]] along the Shirshov split otherwise."""
    if len(word) == 1:
        return letter(word[0])
    if not is_lyndon(word):
        raise ValueError(f"Super-letters are defined on Lyndon words, got {word}")
    left, right = shirshov(word)
    return bracket(superletter(left), superletter(right))


def self_braiding(degree: Degree) -> Scalar:
    return chi(degree, degree)


def height(degree: Degree, convention: str | None = None) -> int | None:
    """Exponent bound of a root vector of this degree; None means unbounded."""
    convention = convention or settings.height_convention
    if convention not in HEIGHT_CONVENTIONS:
        raise ValueError(f"Height convention must be one of: {list(HEIGHT_CONVENTIONS)}")
    order = root_of_unity_order(self_braiding(degree))
    if order is None:
        return None
    if order == 1:
        return 1 if convention == "literal" else None
    return order


def predicted_multiplicity(degree: Degree) -> int:
    """1 on real roots and at odd or 4n multiples of delta, 2 at (4n+2) delta."""
    a1, a2 = degree
    if abs(a1 - a2) == 1:
        return 1
    if a1 == a2 and a1 > 0:
        return 2 if a1 % 4 == 2 else 1
    return 0


def predicted_pbw_dimension(degree: Degree, convention: str | None = None) -> int:
    """Number of PBW monomials of a degree over the predicted roots."""
    target = tuple(degree)
    counts = {(i, j): 0 for i in range(target[0] + 1) for j in range(target[1] + 1)}
    counts[(0, 0)] = 1
    for root in list(counts):
        multiplicity = predicted_multiplicity(root)
        if not multiplicity:
            continue
        bound = height(root, convention)
        for _ in range(multiplicity):
            updated = {}
            for d in counts:
                total, exponent = 0, 0
                while bound is None or exponent < bound:
                    rest = (d[0] - exponent * root[0], d[1] - exponent * root[1])
                    if rest[0] < 0 or rest[1] < 0:
                        break
                    total += counts[rest]
                    exponent += 1
                updated[d] = total
            counts = updated
    return counts[target]


@dataclass(frozen=True)
class RootCandidate:
    """A Lyndon power v^k admitted as a possible root vector."""

    base: Word
    power: int

    @property
    def word(self) -> Word:
        return self.base * self.power

    @property
    def degree(self) -> Degree:
        return word_degree(self.word)

    @property
    def element(self) -> FreeElement:
        return superletter(self.base) ** self.power


def root_vector_candidates(degree: Degree) -> list[RootCandidate]:
    """Candidates [v]^k of a degree, in decreasing word order.

    k = 1 always; k > 1 only when chi(deg v, deg v) has finite order k.
    """
    degree = tuple(degree)
    candidates = []
    common = gcd(degree[0], degree[1])
    for power in range(1, common + 1):
        if common % power:
            continue
        base_degree = (degree[0] // power, degree[1] // power)
        if power > 1 and root_of_unity_order(self_braiding(base_degree)) != power:
            continue
        for lyndon in lyndon_words(base_degree):
            candidates.append(RootCandidate(base=lyndon.word, power=power))
    return sorted(candidates, key=lambda c: c.word, reverse=True)


def root_label(degree: Degree, power: int) -> str:
    """Xn / Yn for real roots; Mn, Mn^2 or Ln on multiples of delta."""
    a1, a2 = degree
    if a1 == a2 + 1:
        return f"X{a1}"
    if a2 == a1 + 1:
        return f"Y{a2}"
    if a1 == a2:
        if power == 2:
            return f"M{a1 // 2}^2"
        return f"M{a1}" if a1 % 2 else f"L{a1}"
    return f"[{a1},{a2}]"


@dataclass(frozen=True)
class RootVector:
    name: str
    base: Word
    power: int
    height: int | None
    element: FreeElement = field(compare=False, repr=False)

    @property
    def word(self) -> Word:
        return self.base * self.power

    @property
    def degree(self) -> Degree:
        return word_degree(self.word)


@dataclass
class RootDatum:
    degree: Degree
    multiplicity: int
    height: int | None
    generators: list[RootVector]
    dimension: int = 0
    certified: bool = False


def _power_name(name: str, exponent: int) -> str:
    if exponent == 1:
        return name
    if "^" in name:
        return f"({name})^{exponent}"
    return f"{name}^{exponent}"


@dataclass(frozen=True)
class PBWMonomial:
    """[v_k]^m_k ... [v_1]^m_1 with v_k > ... > v_1."""

    factors: tuple[tuple[RootVector, int], ...]

    @property
    def name(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(_power_name(root.name, exponent) for root, exponent in self.factors)

    @property
    def degree(self) -> Degree:
        a1 = sum(root.degree[0] * m for root, m in self.factors)
        a2 = sum(root.degree[1] * m for root, m in self.factors)
        return (a1, a2)

    @property
    def smallest_word(self) -> Word:
        return self.factors[-1][0].word

    def element(self) -> FreeElement:
        return _monomial_element(self.factors)


@lru_cache(maxsize=4096)
def _monomial_element(factors: tuple[tuple[RootVector, int], ...]) -> FreeElement:
    result = FreeElement.one()
    for root, exponent in factors:
        result = multiply(result, root.element**exponent)
    return result


def enumerate_monomials(roots: list[RootVector], degree: Degree) -> list[PBWMonomial]:
    """PBW monomials of a degree over the given root vectors."""
    ordered = sorted(roots, key=lambda r: r.word, reverse=True)
    results: list[PBWMonomial] = []

    def extend(index: int, remaining: Degree, factors: list[tuple[RootVector, int]]) -> None:
        if remaining == (0, 0):
            results.append(PBWMonomial(tuple(factors)))
            return
        if index == len(ordered):
            return
        root = ordered[index]
        d1, d2 = root.degree
        unbounded = remaining[0] + remaining[1]
        fits = min(
            remaining[0] // d1 if d1 else unbounded,
            remaining[1] // d2 if d2 else unbounded,
        )
        if root.height is not None:
            fits = min(fits, root.height - 1)
        for exponent in range(fits, -1, -1):
            rest = (remaining[0] - exponent * d1, remaining[1] - exponent * d2)
            if exponent:
                factors.append((root, exponent))
            extend(index + 1, rest, factors)
            if exponent:
                factors.pop()

    extend(0, tuple(degree), [])
    return results


class RootSystem:
    """Root vectors and PBW monomials found by sweeping degrees upward."""

    def __init__(self, kernel: NicholsKernel | None = None, height_convention: str | None = None):
        self.kernel = kernel or nichols_kernel
        self.height_convention = height_convention or settings.height_convention
        if self.height_convention not in HEIGHT_CONVENTIONS:
            raise ValueError(f"Height convention must be one of: {list(HEIGHT_CONVENTIONS)}")
        self._roots: dict[Degree, RootDatum] = {}
        self._swept_total = 0
        self._lock = threading.RLock()

    @property
    def root_vectors(self) -> list[RootVector]:
        return [root for datum in self._roots.values() for root in datum.generators]

    def is_root_vector(self, candidate: RootCandidate, known_higher_roots: list[RootVector]) -> bool:
        """True when [w] is not spanned by ordered monomials in roots greater than w."""
        higher = [r for r in known_higher_roots if r.word > candidate.word]
        tracker = self.kernel.span_tracker()
        for monomial in enumerate_monomials(higher, candidate.degree):
            tracker.add(self.kernel.dual_coordinates(monomial.element()))
        return not tracker.contains(self.kernel.dual_coordinates(candidate.element))

    def certify_dimension(self, degree: Degree) -> DimensionResult:
        """Dimension at a degree, certified when a multipoint rank meets the predicted PBW count."""
        result = self.kernel.dimension_result(degree)
        if result.certified:
            return result
        predicted = predicted_pbw_dimension(result.degree, self.height_convention)
        if result.rank == predicted:
            return replace(result, certified=True)
        logger.warning(f"Degree {result.degree}: rank {result.rank} differs from the PBW count {predicted}")
        return result

    def _sweep_degree(self, degree: Degree) -> RootDatum:
        dimension = self.certify_dimension(degree)
        known = self.root_vectors
        existing = len(enumerate_monomials(known, degree))
        shortfall = dimension.rank - existing
        bound = height(degree, self.height_convention)
        found: list[RootVector] = []
        if shortfall > 0:
            # Candidates arrive in decreasing word order; monomials join the
            # span as soon as all of their factors exceed the current word.
            monomials = sorted(
                enumerate_monomials(known, degree),
                key=lambda m: m.smallest_word,
                reverse=True,
            )
            tracker = self.kernel.span_tracker()
            cursor = 0
            for candidate in root_vector_candidates(degree):
                while cursor < len(monomials) and monomials[cursor].smallest_word > candidate.word:
                    tracker.add(self.kernel.dual_coordinates(monomials[cursor].element()))
                    cursor += 1
                coordinates = self.kernel.dual_coordinates(candidate.element)
                if tracker.contains(coordinates):
                    continue
                tracker.add(coordinates)
                found.append(
                    RootVector(
                        name=root_label(degree, candidate.power),
                        base=candidate.base,
                        power=candidate.power,
                        height=bound,
                        element=candidate.element,
                    )
                )
        if len(found) != shortfall:
            raise RuntimeError(
                f"Degree {degree}: dimension {dimension.rank} leaves a shortfall of "
                f"{shortfall} but {len(found)} candidates are new root vectors"
            )
        return RootDatum(
            degree=degree,
            multiplicity=len(found),
            height=bound,
            generators=found,
            dimension=dimension.rank,
            certified=dimension.certified,
        )

    def compute_roots(self, max_total_degree: int) -> list[RootDatum]:
        """Sweep degrees by total degree, ties by a1, and return the roots found."""
        with self._lock:
            for total in range(self._swept_total + 1, max_total_degree + 1):
                for a1 in range(total + 1):
                    degree = (a1, total - a1)
                    datum = self._sweep_degree(degree)
                    if datum.multiplicity:
                        self._roots[degree] = datum
                        names = ", ".join(r.name for r in datum.generators)
                        logger.info(f"Degree {degree}: multiplicity {datum.multiplicity} ({names})")
                logger.debug(f"Swept total degree {total}")
                self._swept_total = total
            return [
                datum
                for degree, datum in sorted(self._roots.items(), key=lambda item: (sum(item[0]), item[0][0]))
                if sum(degree) <= max_total_degree
            ]

    def multiplicity(self, degree: Degree) -> int:
        self.compute_roots(sum(degree))
        datum = self._roots.get(tuple(degree))
        return datum.multiplicity if datum else 0

    def pbw_monomials(self, degree: Degree) -> list[PBWMonomial]:
        self.compute_roots(sum(degree))
        return enumerate_monomials(self.root_vectors, tuple(degree))

    def pbw_expand(self, a: FreeElement) -> dict[PBWMonomial, Scalar]:
        """Coefficients of a in the PBW basis; a nonzero residual is fatal."""
        expansion: dict[PBWMonomial, Scalar] = {}
        for degree, component in a.components().items():
            monomials = self.pbw_monomials(degree)
            coefficients = self.kernel.solve_in_span(component, [m.element() for m in monomials])
            if coefficients is None:
                raise RuntimeError(f"PBW expansion failed at degree {degree}: residual is nonzero")
            for monomial, c in zip(monomials, coefficients):
                if c:
                    expansion[monomial] = c
        return expansion


# Global root system instance
root_system = RootSystem()
