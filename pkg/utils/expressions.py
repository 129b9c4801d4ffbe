"""Parser for algebra expressions typed on the command line.

    [a,b]      braided bracket
    {a,b}      anti bracket
    a b, a*b   product
    a/c        division by a scalar
    a^n        power
    X3 Y2 L4 Lp4 Lt4 Lh3 M5 Lbar4 Mbar3 Lring4 x1 x2, scalars q, i, theta
"""

import logging
from functools import lru_cache

import pyparsing as pp

from algebra.free_algebra import FreeElement, anti_bracket, bracket, letter
from algebra.generators import generator
from algebra.scalars import I, THETA, q
from algebra.series import bar_L, overline_M_squared, ring_L

logger = logging.getLogger(__name__)

_DERIVED = {"Lbar": bar_L, "Mbar": overline_M_squared, "Lring": ring_L}
_SYMBOLS = {"q": q, "i": I, "theta": THETA}


class ExpressionError(ValueError):
    """Parse failure with the offending position and what was expected there."""

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"{expected} at position {position} in '{text}'")


def _named(s: str, loc: int, toks: pp.ParseResults) -> FreeElement:
    token = toks[0]
    if token in ("x1", "x2"):
        return letter(int(token[1]))
    name = token.rstrip("0123456789")
    index = int(token[len(name):])
    try:
        if name in _DERIVED:
            return _DERIVED[name](index)
        return generator(name, index)
    except ValueError as e:
        raise pp.ParseFatalException(s, loc, str(e)) from e


def _power(toks: pp.ParseResults) -> FreeElement:
    base = toks[0]
    return base ** toks[1] if len(toks) > 1 else base


def _product(s: str, loc: int, toks: pp.ParseResults) -> FreeElement:
    result = toks[0]
    for op, factor in zip(toks[1::2], toks[2::2]):
        if op == "*":
            result = result * factor
            continue
        if factor.is_zero() or factor.degrees() != {(0, 0)}:
            raise pp.ParseFatalException(s, loc, "Expected a nonzero scalar divisor")
        result = result.scale(1 / factor.constant_term())
    return result


def _sum(toks: pp.ParseResults) -> FreeElement:
    result = FreeElement.zero()
    for op, term in zip(toks[0::2], toks[1::2]):
        result = result + term if op == "+" else result - term
    return result


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()

    integer = pp.Regex(r"\d+").set_parse_action(lambda t: FreeElement.constant(int(t[0])))
    exponent = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
    name = pp.Regex(r"(?:Lring|Lbar|Mbar|Lp|Lt|Lh|X|Y|L|M)\d+|x[12]").set_name("generator")
    name.set_parse_action(_named)
    symbol = pp.Regex(r"theta|q|i").set_name("scalar")
    symbol.set_parse_action(lambda t: FreeElement.constant(_SYMBOLS[t[0]]))

    braided = pp.Suppress("[") + expr + pp.Suppress(",") + expr + pp.Suppress("]")
    braided.set_parse_action(lambda t: bracket(t[0], t[1]))
    anti = pp.Suppress("{") + expr + pp.Suppress(",") + expr + pp.Suppress("}")
    anti.set_parse_action(lambda t: anti_bracket(t[0], t[1]))
    paren = pp.Suppress("(") + expr + pp.Suppress(")")

    atom = braided | anti | paren | name | symbol | integer
    factor = (atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(_power)
    term = factor + pp.ZeroOrMore(pp.Optional(pp.one_of("* /"), default="*") + factor)
    term.set_parse_action(_product)
    add_op = pp.one_of("+ -")
    expr <<= pp.Optional(add_op, default="+") + term + pp.ZeroOrMore(add_op + term)
    expr.set_parse_action(_sum)
    return expr


def parse_expression(text: str) -> FreeElement:
    """Evaluate ``text`` to a FreeElement."""
    try:
        result = _grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        logger.debug(f"Parse failure in '{text}': {e.msg}")
        raise ExpressionError(text, e.loc, e.msg) from e
    return result[0]
