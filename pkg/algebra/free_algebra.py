"""The Z^2-graded free algebra T(V) on x1, x2 with its braided structure.

Words are tuples over the letters 1 and 2. Elements are sparse maps from
words to scalars; tensors are sparse maps from word pairs to scalars.
"""

import logging
import re
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from itertools import combinations
from typing import Any

from algebra.scalars import ONE, Scalar, q, scalar, scalar_to_json, to_text
from utils.config import settings

logger = logging.getLogger(__name__)

Word = tuple[int, ...]
Degree = tuple[int, int]

LETTERS = (1, 2)
ZERO_DEGREE: Degree = (0, 0)
SIMPLE_ROOTS: dict[int, Degree] = {1: (1, 0), 2: (0, 1)}

_WORD_PATTERN = re.compile(r"(?:x[12])+")


def word_degree(word: Word) -> Degree:
    return (word.count(1), word.count(2))


def add_degrees(a: Degree, b: Degree) -> Degree:
    return (a[0] + b[0], a[1] + b[1])


def sub_degrees(a: Degree, b: Degree) -> Degree:
    return (a[0] - b[0], a[1] - b[1])


def words_of_degree(degree: Degree) -> list[Word]:
    """All words of the given degree, in increasing lexicographic order."""
    ones, twos = degree
    if ones < 0 or twos < 0:
        return []
    length = ones + twos
    words = []
    for positions in combinations(range(length), twos):
        letters = [1] * length
        for p in positions:
            letters[p] = 2
        words.append(tuple(letters))
    return sorted(words)


def word_text(word: Word) -> str:
    return " ".join(f"x{letter}" for letter in word) if word else "1"


def parse_word(text: str) -> Word:
    """Read ``x1x1x2`` (spaces allowed) into a word."""
    compact = "".join(text.split())
    if compact in ("", "1"):
        return ()
    if not _WORD_PATTERN.fullmatch(compact):
        raise ValueError(f"Invalid word '{text}': expected letters x1 and x2")
    return tuple(int(ch) for ch in compact[1::2])


class Bicharacter:
    """chi(a, b) = prod q_ij^(a_i b_j) for a diagonal braiding matrix."""

    def __init__(self, matrix: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]):
        self.matrix = matrix
        self._cache: dict[tuple[Degree, Degree], Scalar] = {}

    def __call__(self, a: Degree, b: Degree) -> Scalar:
        key = (a, b)
        value = self._cache.get(key)
        if value is None:
            value = ONE
            for i in range(2):
                for j in range(2):
                    exponent = a[i] * b[j]
                    if exponent:
                        value = value * self.matrix[i][j] ** exponent
            self._cache[key] = value
        return value


# Global braiding of the rank-2 space: q11 = q, q12 = q21 = 1/q, q22 = -q
BRAIDING = Bicharacter(((q, 1 / q), (1 / q, -q)))


def chi(a: Degree, b: Degree) -> Scalar:
    return BRAIDING(a, b)


def _add_term(acc: dict, key: Any, value: Scalar) -> None:
    current = acc.get(key)
    acc[key] = value if current is None else current + value


class FreeElement:
    """A finite scalar combination of words; immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self._terms: dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c}
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls()

    @classmethod
    def one(cls) -> "FreeElement":
        return cls({(): ONE})

    @classmethod
    def constant(cls, value: Any) -> "FreeElement":
        return cls({(): scalar(value)})

    @classmethod
    def from_word(cls, word: Word, coeff: Any = ONE) -> "FreeElement":
        return cls({tuple(word): scalar(coeff)})

    @classmethod
    def letter(cls, i: int) -> "FreeElement":
        if i not in LETTERS:
            raise ValueError(f"Letter index must be 1 or 2, got {i}")
        return cls({(i,): ONE})

    @classmethod
    def sum(cls, elements: Iterable["FreeElement"]) -> "FreeElement":
        acc: dict[Word, Scalar] = {}
        for element in elements:
            for w, c in element._terms.items():
                _add_term(acc, w, c)
        return cls(acc)

    # Queries

    def items(self) -> Iterator[tuple[Word, Scalar]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Word, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: (len(item[0]), item[0]))

    def words(self) -> list[Word]:
        return list(self._terms)

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), scalar(0))

    def constant_term(self) -> Scalar:
        return self.coefficient(())

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[Degree]:
        return {word_degree(w) for w in self._terms}

    def degree(self) -> Degree | None:
        """The common degree of all terms, or None if there is none."""
        degrees = self.degrees()
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree() is not None

    def components(self) -> dict[Degree, "FreeElement"]:
        parts: dict[Degree, dict[Word, Scalar]] = {}
        for w, c in self._terms.items():
            parts.setdefault(word_degree(w), {})[w] = c
        return {d: FreeElement(parts[d]) for d in sorted(parts)}

    def component(self, degree: Degree) -> "FreeElement":
        return FreeElement({w: c for w, c in self._terms.items() if word_degree(w) == degree})

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    # Arithmetic

    def __add__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _add_term(acc, w, c)
        return FreeElement(acc)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _add_term(acc, w, -c)
        return FreeElement(acc)

    def __neg__(self) -> "FreeElement":
        return FreeElement({w: -c for w, c in self._terms.items()})

    def scale(self, factor: Any) -> "FreeElement":
        factor = scalar(factor)
        if not factor:
            return FreeElement()
        return FreeElement({w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other: Any) -> "FreeElement":
        if isinstance(other, FreeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "FreeElement":
        return self.scale(other)

    def __truediv__(self, other: Any) -> "FreeElement":
        divisor = scalar(other)
        if not divisor:
            raise ZeroDivisionError("Division of a free algebra element by zero")
        return self.scale(1 / divisor)

    def __pow__(self, n: int) -> "FreeElement":
        if n < 0:
            raise ValueError(f"Negative power {n} of a free algebra element")
        result = FreeElement.one()
        for _ in range(n):
            result = multiply(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Serialisation

    def to_text(self) -> str:
        """Canonical ``coeff * x1 x2 ...`` text with terms in sorted word order."""
        if not self._terms:
            return "0"
        return " + ".join(
            f"{to_text(c)} * {word_text(w)}" for w, c in self.sorted_items()
        )

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"word": "".join(f"x{x}" for x in w), "coeff": scalar_to_json(c)}
            for w, c in self.sorted_items()
        ]

    def __repr__(self) -> str:
        return f"<FreeElement({self.to_text()})>"


def letter(i: int) -> FreeElement:
    return FreeElement.letter(i)


def multiply(a: FreeElement, b: FreeElement) -> FreeElement:
    """Bilinear extension of word concatenation."""
    acc: dict[Word, Scalar] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            _add_term(acc, wa + wb, ca * cb)
    return FreeElement(acc)


def _twisted(a: FreeElement, b: FreeElement, sign: int) -> FreeElement:
    acc: dict[Word, Scalar] = {}
    b_parts = b.components()
    for da, pa in a.components().items():
        for db, pb in b_parts.items():
            factor = sign * chi(da, db)
            for wa, ca in pa.items():
                for wb, cb in pb.items():
                    c = ca * cb
                    _add_term(acc, wa + wb, c)
                    _add_term(acc, wb + wa, factor * c)
    return FreeElement(acc)


def bracket(a: FreeElement, b: FreeElement) -> FreeElement:
    """Braided bracket ab - chi(deg a, deg b) ba, per homogeneous component."""
    return _twisted(a, b, -1)


def anti_bracket(a: FreeElement, b: FreeElement) -> FreeElement:
    """Anti bracket ab + chi(deg a, deg b) ba."""
    return _twisted(a, b, 1)


def counit(a: FreeElement) -> Scalar:
    return a.constant_term()


class TensorElement:
    """A finite scalar combination of word pairs in T(V) (x) T(V)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[Word, Word], Scalar] | None = None):
        self._terms: dict[tuple[Word, Word], Scalar] = {
            k: c for k, c in (terms or {}).items() if c
        }

    @classmethod
    def pure(cls, left: FreeElement, right: FreeElement, coeff: Any = ONE) -> "TensorElement":
        """left (x) right, scaled by coeff."""
        factor = scalar(coeff)
        acc: dict[tuple[Word, Word], Scalar] = {}
        for wl, cl in left.items():
            for wr, cr in right.items():
                _add_term(acc, (wl, wr), factor * cl * cr)
        return cls(acc)

    @classmethod
    def sum(cls, tensors: Iterable["TensorElement"]) -> "TensorElement":
        acc: dict[tuple[Word, Word], Scalar] = {}
        for tensor in tensors:
            for k, c in tensor._terms.items():
                _add_term(acc, k, c)
        return cls(acc)

    def items(self) -> Iterator[tuple[tuple[Word, Word], Scalar]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[tuple[Word, Word], Scalar]]:
        return sorted(
            self._terms.items(),
            key=lambda item: (len(item[0][0]), item[0][0], len(item[0][1]), item[0][1]),
        )

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, left: Word, right: Word) -> Scalar:
        return self._terms.get((tuple(left), tuple(right)), scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def bidegrees(self) -> dict[tuple[Degree, Degree], "TensorElement"]:
        """Split into components keyed by (left-leg degree, right-leg degree)."""
        parts: dict[tuple[Degree, Degree], dict] = {}
        for (wl, wr), c in self._terms.items():
            parts.setdefault((word_degree(wl), word_degree(wr)), {})[(wl, wr)] = c
        return {k: TensorElement(parts[k]) for k in sorted(parts)}

    def filter_left(self, predicate) -> "TensorElement":
        """Keep the terms whose left-leg degree satisfies ``predicate``."""
        return TensorElement(
            {k: c for k, c in self._terms.items() if predicate(word_degree(k[0]))}
        )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_term(acc, k, c)
        return TensorElement(acc)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_term(acc, k, -c)
        return TensorElement(acc)

    def __neg__(self) -> "TensorElement":
        return TensorElement({k: -c for k, c in self._terms.items()})

    def scale(self, factor: Any) -> "TensorElement":
        factor = scalar(factor)
        return TensorElement({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, other: Any) -> "TensorElement":
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "TensorElement":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TensorElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{to_text(c)} * {word_text(wl)} (x) {word_text(wr)}"
            for (wl, wr), c in self.sorted_items()
        )

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "left": "".join(f"x{x}" for x in wl),
                "right": "".join(f"x{x}" for x in wr),
                "coeff": scalar_to_json(c),
            }
            for (wl, wr), c in self.sorted_items()
        ]

    def __repr__(self) -> str:
        return f"<TensorElement({self.to_text()})>"


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    """Braided product (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd."""
    acc: dict[tuple[Word, Word], Scalar] = {}
    for (a, b), c1 in s.items():
        deg_b = word_degree(b)
        for (c, d), c2 in t.items():
            _add_term(acc, (a + c, b + d), chi(deg_b, word_degree(c)) * c1 * c2)
    return TensorElement(acc)


def counit_left(t: TensorElement) -> FreeElement:
    """(counit (x) id) applied to a tensor."""
    acc: dict[Word, Scalar] = {}
    for (wl, wr), c in t.items():
        if not wl:
            _add_term(acc, wr, c)
    return FreeElement(acc)


def counit_right(t: TensorElement) -> FreeElement:
    """(id (x) counit) applied to a tensor."""
    acc: dict[Word, Scalar] = {}
    for (wl, wr), c in t.items():
        if not wr:
            _add_term(acc, wl, c)
    return FreeElement(acc)


def _fits(degree: Degree, bound: Degree) -> bool:
    return degree[0] <= bound[0] and degree[1] <= bound[1]


def _word_coproduct(word: Word, left_degree: Degree | None) -> dict[tuple[Word, Word], Scalar]:
    total = word_degree(word)
    right_bound = sub_degrees(total, left_degree) if left_degree is not None else None
    terms: dict[tuple[Word, Word], Scalar] = {((), ()): ONE}
    for x in word:
        alpha = SIMPLE_ROOTS[x]
        step: dict[tuple[Word, Word], Scalar] = {}
        for (left, right), c in terms.items():
            new_left = left + (x,)
            if left_degree is None or _fits(word_degree(new_left), left_degree):
                _add_term(step, (new_left, right), c * chi(word_degree(right), alpha))
            new_right = right + (x,)
            if right_bound is None or _fits(word_degree(new_right), right_bound):
                _add_term(step, (left, new_right), c)
        terms = step
    return terms


def coproduct(a: FreeElement, left_degree: Degree | None = None) -> TensorElement:
    """Braided coproduct with primitive letters.

    With ``left_degree`` only the terms whose left leg has that degree are
    produced.
    """
    acc: dict[tuple[Word, Word], Scalar] = {}
    for w, c in a.items():
        for key, value in _word_coproduct(w, left_degree).items():
            _add_term(acc, key, c * value)
    return TensorElement(acc)


@lru_cache(maxsize=settings.cache_size)
def _diff_right_word(i: int, word: Word) -> tuple[tuple[Word, Scalar], ...]:
    alpha = SIMPLE_ROOTS[i]
    acc: dict[Word, Scalar] = {}
    suffix = ZERO_DEGREE
    for k in range(len(word) - 1, -1, -1):
        if word[k] == i:
            _add_term(acc, word[:k] + word[k + 1 :], chi(alpha, suffix))
        suffix = add_degrees(suffix, SIMPLE_ROOTS[word[k]])
    return tuple(acc.items())


@lru_cache(maxsize=settings.cache_size)
def _diff_left_word(i: int, word: Word) -> tuple[tuple[Word, Scalar], ...]:
    alpha = SIMPLE_ROOTS[i]
    acc: dict[Word, Scalar] = {}
    prefix = ZERO_DEGREE
    for k, x in enumerate(word):
        if x == i:
            _add_term(acc, word[:k] + word[k + 1 :], chi(prefix, alpha))
        prefix = add_degrees(prefix, SIMPLE_ROOTS[x])
    return tuple(acc.items())


def _apply_word_map(a: FreeElement, word_map, i: int) -> FreeElement:
    if i not in LETTERS:
        raise ValueError(f"Derivation index must be 1 or 2, got {i}")
    acc: dict[Word, Scalar] = {}
    for w, c in a.items():
        for v, d in word_map(i, w):
            _add_term(acc, v, c * d)
    return FreeElement(acc)


def diff_right(i: int, a: FreeElement) -> FreeElement:
    """Right skew derivation: d(xy) = x d(y) + d(x) chi(alpha_i, deg y) y."""
    return _apply_word_map(a, _diff_right_word, i)


def diff_left(i: int, a: FreeElement) -> FreeElement:
    """Left skew derivation: d(xy) = d(x) y + chi(deg x, alpha_i) x d(y)."""
    return _apply_word_map(a, _diff_left_word, i)
