"""A small recursive-descent parser for ring expressions.

Grammar (whitespace is insignificant)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := power ('*' power)*
    power   := primary ['^' INTEGER]
    primary := INTEGER | NAME | '(' expr ')'

The parser is generic over the value type: the caller supplies how integer
literals and names become values, and the values only need ``+``, ``-``,
``*``, unary ``-`` and ``**`` with a nonnegative int.
"""

import re

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text, offset=0):
    """Yield ``(kind, value, position)`` triples; kind is INT, NAME or OP."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        number, name, op = m.groups()
        start = offset + m.start(m.lastindex)
        if number is not None:
            tokens.append(("INT", number, start))
        elif name is not None:
            tokens.append(("NAME", name, start))
        else:
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}", text, start)
            tokens.append(("OP", op, start))
        pos = m.end()
    tokens.append(("END", "", offset + len(text)))
    return tokens


class ExpressionParser:
    """Parse one expression into a value.

    *integer* maps a Python int to a value; *name* maps ``(identifier,
    position)`` to a value and raises :class:`ParseError` for unknown names.
    """

    def __init__(self, integer, name):
        self.integer = integer
        self.name = name

    def parse(self, text, offset=0):
        self._text = text
        self._tokens = tokenize(text, offset)
        self._i = 0
        if self._peek()[0] == "END":
            raise ParseError("empty expression", text, self._peek()[2])
        value = self._expr()
        kind, tok, pos = self._peek()
        if kind != "END":
            raise ParseError(f"unexpected {tok!r}", text, pos)
        return value

    def _peek(self):
        return self._tokens[self._i]

    def _next(self):
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _accept(self, op):
        kind, tok, _ = self._peek()
        if kind == "OP" and tok == op:
            self._i += 1
            return True
        return False

    def _expr(self):
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        value = self._term()
        if negate:
            value = -value
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self):
        value = self._power()
        while self._accept("*"):
            value = value * self._power()
        return value

    def _power(self):
        base = self._primary()
        if self._accept("^"):
            kind, tok, pos = self._next()
            if kind != "INT":
                raise ParseError("exponent must be a nonnegative integer", self._text, pos)
            return base ** int(tok)
        return base

    def _primary(self):
        kind, tok, pos = self._next()
        if kind == "INT":
            return self.integer(int(tok))
        if kind == "NAME":
            return self.name(tok, pos)
        if kind == "OP" and tok == "(":
            value = self._expr()
            kind, tok, pos = self._next()
            if not (kind == "OP" and tok == ")"):
                raise ParseError("expected ')'", self._text, pos)
            return value
        what = "end of input" if kind == "END" else repr(tok)
        raise ParseError(f"unexpected {what}", self._text, pos)
