"""Named root-vector elements Xn, Yn, Ln, Ln', L~n, L^n and M(2k+1)."""

import logging
from dataclasses import dataclass
from functools import lru_cache

from algebra.free_algebra import FreeElement, bracket
from algebra.lyndon import superletter
from algebra.scalars import THETA

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("X", "Y", "L", "Lp", "Lt", "Lh", "M")

_ALIASES = {"Ltilde": "Lt", "Lhat": "Lh", "Lprime": "Lp"}


@dataclass(frozen=True)
class NamedGenerator:
    name: str
    index: int

    @property
    def label(self) -> str:
        return f"{self.name}{self.index}"

    @property
    def element(self) -> FreeElement:
        return generator(self.name, self.index)


def _require(condition: bool, name: str, n: int) -> None:
    if not condition:
        raise ValueError(f"Invalid index {n} for generator {name}")


@lru_cache(maxsize=None)
def generator(name: str, n: int) -> FreeElement:
    """The element called ``name`` with index ``n``."""
    name = _ALIASES.get(name, name)
    if name == "X":
        _require(n >= 1, name, n)
        return superletter((1,) + (1, 2) * (n - 1))
    if name == "Y":
        _require(n >= 1, name, n)
        return superletter((1, 2) * (n - 1) + (2,))
    if name == "L":
        _require(n >= 0, name, n)
        if n == 0:
            return FreeElement.constant(1 / THETA)
        return bracket(generator("X", 1), generator("Y", n))
    if name == "Lp":
        _require(n >= 0, name, n)
        if n == 0:
            return FreeElement.constant(1 / THETA)
        if n == 1:
            return generator("L", 1)
        return bracket(generator("X", 2), generator("Y", n - 1))
    if name == "Lt":
        if n < 0:
            return FreeElement.zero()
        return (generator("L", n) + generator("Lp", n)) / 2
    if name == "Lh":
        _require(n >= 1, name, n)
        return bracket(generator("L", n - 1), generator("L", 1))
    if name == "M":
        _require(n >= 1 and n % 2 == 1, name, n)
        if n == 1:
            return generator("L", 1)
        return bracket(generator("L", 2), generator("M", n - 2))
    raise ValueError(f"Unknown generator name '{name}'; expected one of {list(GENERATOR_NAMES)}")


def X(n: int) -> FreeElement:  # noqa: N802
    return generator("X", n)


def Y(n: int) -> FreeElement:  # noqa: N802
    return generator("Y", n)


def L(n: int) -> FreeElement:  # noqa: N802
    return generator("L", n)


def Lp(n: int) -> FreeElement:  # noqa: N802
    return generator("Lp", n)


def Lt(n: int) -> FreeElement:  # noqa: N802
    return generator("Lt", n)


def Lh(n: int) -> FreeElement:  # noqa: N802
    return generator("Lh", n)


def M(n: int) -> FreeElement:  # noqa: N802
    return generator("M", n)
