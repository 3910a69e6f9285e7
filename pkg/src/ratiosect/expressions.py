"""A small arithmetic-expression language for command-line objectives.

Supports numeric literals, the variable ``x``, unary minus, the binary
operators ``+ - * / ^`` (with ``^`` the right-associative power operator
binding tighter than unary minus on its left, so ``-2^2 == -4`` and
``2^-3 == 0.125``), and calls to ``sin``, ``cos``, ``exp``, ``abs``,
``sqrt``, ``cosh``, ``sinh``, ``pow`` (two arguments) and variadic
``max``/``min`` (two or more).  Whitespace is insignificant.

Example::

    >>> f = parse_expression("0.2 + (x - 1.5)^2")
    >>> f(1.5)
    0.2

Parse problems raise :class:`ExpressionError` carrying the offset of the
offending token; evaluation at a finite ``x`` either returns a finite
float or raises a domain/arithmetic error (``sqrt(-1)``, division by
zero, overflow), which the solvers' objective wrapper turns into an
evaluation failure.
"""

from __future__ import annotations

import math
import re
from typing import Any

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)

# name -> (min arity, max arity or None for unbounded)
_FUNCTIONS: dict[str, tuple[int, int | None]] = {
    "sin": (1, 1),
    "cos": (1, 1),
    "exp": (1, 1),
    "abs": (1, 1),
    "sqrt": (1, 1),
    "cosh": (1, 1),
    "sinh": (1, 1),
    "pow": (2, 2),
    "max": (2, None),
    "min": (2, None),
}

_UNARY_IMPL = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "abs": abs,
    "sqrt": math.sqrt,
    "cosh": math.cosh,
    "sinh": math.sinh,
}


class ExpressionError(ValueError):
    """Syntax, arity, or unknown-name problem; ``position`` is the offset
    into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def _power(base: float, exponent: float) -> float:
    result = base ** exponent
    if isinstance(result, complex):
        raise ValueError(
            f"fractional power of negative base: {base!r} ^ {exponent!r}"
        )
    return result


class Expression:
    """A parsed expression; calling it evaluates at the given ``x``."""

    def __init__(self, source: str, tree: Any):
        self.source = source
        self._tree = tree

    def __call__(self, x: float) -> float:
        return float(_evaluate(self._tree, x))

    def __repr__(self) -> str:
        return f"Expression({self.source!r})"


def _evaluate(node: Any, x: float) -> float:
    match node:
        case ("num", value):
            return value
        case ("var",):
            return x
        case ("neg", inner):
            return -_evaluate(inner, x)
        case ("bin", "+", left, right):
            return _evaluate(left, x) + _evaluate(right, x)
        case ("bin", "-", left, right):
            return _evaluate(left, x) - _evaluate(right, x)
        case ("bin", "*", left, right):
            return _evaluate(left, x) * _evaluate(right, x)
        case ("bin", "/", left, right):
            return _evaluate(left, x) / _evaluate(right, x)
        case ("bin", "^", left, right):
            return _power(_evaluate(left, x), _evaluate(right, x))
        case ("call", name, args):
            values = [_evaluate(arg, x) for arg in args]
            if name == "pow":
                return _power(values[0], values[1])
            if name == "max":
                return max(values)
            if name == "min":
                return min(values)
            return _UNARY_IMPL[name](values[0])
    raise AssertionError(f"unreachable node {node!r}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def match_op(self, *ops: str) -> str | None:
        kind, value, _ = self.peek()
        if kind == "op" and value in ops:
            self.advance()
            return value
        return None

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ExpressionError(f"expected {op!r}, found {value or 'end of input'!r}", pos)
        self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self) -> Any:
        node = self.term()
        while (op := self.match_op("+", "-")) is not None:
            node = ("bin", op, node, self.term())
        return node

    # term := factor (('*'|'/') factor)*
    def term(self) -> Any:
        node = self.factor()
        while (op := self.match_op("*", "/")) is not None:
            node = ("bin", op, node, self.factor())
        return node

    # factor := '-' factor | power
    def factor(self) -> Any:
        if self.match_op("-"):
            return ("neg", self.factor())
        return self.power()

    # power := atom ('^' factor)?   (right-associative)
    def power(self) -> Any:
        node = self.atom()
        if self.match_op("^"):
            return ("bin", "^", node, self.factor())
        return node

    def atom(self) -> Any:
        kind, value, pos = self.advance()
        if kind == "number":
            return ("num", float(value))
        if kind == "ident":
            if value == "x":
                return ("var",)
            if value in _FUNCTIONS:
                self.expect_op("(")
                args = [self.expr()]
                while self.match_op(","):
                    args.append(self.expr())
                self.expect_op(")")
                low, high = _FUNCTIONS[value]
                if len(args) < low or (high is not None and len(args) > high):
                    wanted = str(low) if high == low else f"at least {low}"
                    raise ExpressionError(
                        f"{value}() takes {wanted} argument(s), got {len(args)}", pos
                    )
                return ("call", value, tuple(args))
            raise ExpressionError(f"unknown identifier {value!r}", pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionError(
            f"expected a number, 'x', a function call or '(', found "
            f"{value or 'end of input'!r}",
            pos,
        )


def parse_expression(text: str) -> Expression:
    """Parse ``text`` into an :class:`Expression`.

    Raises :class:`ExpressionError` (with offset) on malformed input,
    unknown identifiers, or wrong call arity.
    """
    parser = _Parser(text)
    tree = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ExpressionError(f"unexpected trailing input {value!r}", pos)
    return Expression(text, tree)
