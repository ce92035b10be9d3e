"""Exact integral domains: the integers ``ZZ`` and integer polynomials ``ZZ_t``.

Elements are immutable and always in canonical form, so ``==`` and
``is_zero()`` are reliable.  Python ints are accepted wherever an element
is expected and are coerced into the ambient domain; mixing elements of
two different domains raises :class:`UsageError`.

>>> ZZ(2) + 3
Integer(5)
>>> ZZ_t.parse("t+1") * ZZ_t.parse("t-1")
IntPoly('t^2-1')
"""

from .errors import IntegrityError, ParseError, UsageError
from .parsing import ExpressionParser


class Domain:
    """An integral domain: a factory for its elements plus parsing."""

    name = None
    has_exact_div = False

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, DomainElement):
            if value.domain is not self:
                raise UsageError(
                    f"element of {value.domain.name} used in {self.name}")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return self.from_int(value)
        raise UsageError(f"cannot interpret {value!r} as an element of {self.name}")

    def from_int(self, n):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def names(self):
        """Identifiers (besides integer literals) allowed in element text."""
        return {}

    def parse(self, text, offset=0):
        known = self.names()

        def name(ident, pos):
            if ident not in known:
                raise ParseError(f"unknown name {ident!r} in {self.name}", text, pos)
            return known[ident]

        return ExpressionParser(self.from_int, name).parse(text, offset)

    def __repr__(self):
        return self.name


class DomainElement:
    """Arithmetic shared by the concrete element classes.

    Subclasses implement ``_add``, ``_mul``, ``_neg`` and ``exact_div`` on
    operands already known to live in the same domain.
    """

    __slots__ = ()
    domain = None

    def _other(self, other):
        if isinstance(other, DomainElement):
            if other.domain is not self.domain:
                raise UsageError(
                    f"mixed-domain operands: {self.domain.name} and {other.domain.name}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.domain.from_int(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else self._add(other._neg())

    def __rsub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else other._add(self._neg())

    def __mul__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else self._mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("exponent must be a nonnegative int")
        result = self.domain.one
        base = self
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            exponent >>= 1
            if exponent:
                base = base._mul(base)
        return result

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class Integer(DomainElement):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = int(value)

    def is_zero(self):
        return self.value == 0

    def as_int(self):
        return self.value

    def _add(self, other):
        return Integer(self.value + other.value)

    def _mul(self, other):
        return Integer(self.value * other.value)

    def _neg(self):
        return Integer(-self.value)

    def exact_div(self, other):
        other = self.domain.coerce(other)
        if other.value == 0:
            raise UsageError("division by zero")
        q, r = divmod(self.value, other.value)
        if r:
            raise IntegrityError(f"{other.value} does not divide {self.value}")
        return Integer(q)

    def __eq__(self, other):
        if isinstance(other, Integer):
            return self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented if not isinstance(other, DomainElement) else False

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Integer({self.value})"


class IntPoly(DomainElement):
    """Univariate polynomial in ``t`` with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t^k``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree in ``t``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def as_int(self):
        if len(self.coeffs) <= 1:
            return self.coeffs[0] if self.coeffs else 0
        return None

    def _add(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def _mul(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def _neg(self):
        return IntPoly(-c for c in self.coeffs)

    def exact_div(self, other):
        other = self.domain.coerce(other)
        if other.is_zero():
            raise UsageError("division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            if rem:
                raise IntegrityError(f"{other} does not divide {self}")
            return IntPoly()
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise IntegrityError(f"{other} does not divide {self}")
            quot[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] -= q * b
        if any(rem):
            raise IntegrityError(f"{other} does not divide {self}")
        return IntPoly(quot)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.as_int() == other
        return NotImplemented if not isinstance(other, DomainElement) else False

    def __hash__(self):
        n = self.as_int()
        return hash(n) if n is not None else hash(("t",) + self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out


class IntegerDomain(Domain):
    name = "int"
    has_exact_div = True

    def from_int(self, n):
        return Integer(n)


class IntPolyDomain(Domain):
    name = "intpoly"
    has_exact_div = True

    def from_int(self, n):
        return IntPoly((n,))

    @property
    def t(self):
        return IntPoly((0, 1))

    def names(self):
        return {"t": self.t}


ZZ = IntegerDomain()
ZZ_t = IntPolyDomain()
Integer.domain = ZZ
IntPoly.domain = ZZ_t

DOMAINS = {ZZ.name: ZZ, ZZ_t.name: ZZ_t}


def get_domain(name):
    try:
        return DOMAINS[name]
    except KeyError:
        raise UsageError(f"unknown domain {name!r}; choose from {sorted(DOMAINS)}") from None
