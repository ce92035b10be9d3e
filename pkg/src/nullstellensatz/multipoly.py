"""Sparse multivariate polynomials over an integral domain.

A polynomial in ``x1, ..., xn`` is stored as a map from exponent tuples to
nonzero coefficients.  Text form::

    3*x1^2*x2 - x2 + 5            over ZZ
    (t+1)*x1^2*x2 + (-t)*x3       over ZZ_t

Printing lists terms in decreasing graded-lexicographic order and is
canonical, so ``parse(str(p)) == p``.
"""

from types import MappingProxyType
from typing import NamedTuple

from .errors import InputError, ParseError, UsageError
from .parsing import ExpressionParser, tokenize


class Term(NamedTuple):
    coeff: object
    exponents: tuple

    @property
    def degree(self):
        return sum(self.exponents)


def grlex_key(exponents):
    return (sum(exponents), tuple(exponents))


class Polynomial:
    __slots__ = ("domain", "nvars", "_terms")

    def __init__(self, domain, nvars, terms=None):
        if nvars < 0:
            raise UsageError("number of variables must be nonnegative")
        self.domain = domain
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise UsageError(f"bad exponent vector {exps} for {nvars} variables")
            c = domain.coerce(c)
            if not c.is_zero():
                clean[exps] = c
        self._terms = clean

    @classmethod
    def _raw(cls, domain, nvars, terms):
        p = cls.__new__(cls)
        p.domain = domain
        p.nvars = nvars
        p._terms = terms
        return p

    @classmethod
    def constant(cls, domain, nvars, value):
        return cls(domain, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, domain, nvars, k):
        """The polynomial ``x_k`` (1-based *k*)."""
        if not 1 <= k <= nvars:
            raise UsageError(f"variable x{k} out of range for {nvars} variables")
        exps = tuple(1 if i == k - 1 else 0 for i in range(nvars))
        return cls(domain, nvars, {exps: domain.one})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def sorted_terms(self):
        """Terms in decreasing grlex order."""
        return [Term(self._terms[e], e)
                for e in sorted(self._terms, key=grlex_key, reverse=True)]

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), self.domain.zero)

    # arithmetic

    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise UsageError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            if other.domain is not self.domain:
                raise UsageError("polynomials over different domains")
            return other
        try:
            c = self.domain.coerce(other)
        except UsageError:
            if isinstance(other, int) or getattr(other, "domain", None) is not None:
                raise
            return None
        return Polynomial.constant(self.domain, self.nvars, c)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out[e] + c if e in out else c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial._raw(self.domain, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.domain, self.nvars,
                               {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return Polynomial._raw(self.domain, self.nvars,
                               {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("exponent must be a nonnegative int")
        result = Polynomial.constant(self.domain, self.nvars, self.domain.one)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.domain is other.domain and self.nvars == other.nvars
                    and self._terms == other._terms)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # queries

    def evaluate(self, point):
        point = list(point)
        if len(point) != self.nvars:
            raise UsageError(f"point has {len(point)} coordinates, polynomial has {self.nvars} variables")
        point = [self.domain.coerce(s) for s in point]
        powers = [{0: self.domain.one} for _ in point]
        total = self.domain.zero
        for exps, c in self._terms.items():
            value = c
            for k, e in enumerate(exps):
                if e:
                    value = value * _power(powers[k], point[k], e)
            total = total + value
        return total

    def __call__(self, *point):
        return self.evaluate(point)

    def total_degree(self):
        if not self._terms:
            raise InputError("the zero polynomial has no degree")
        return max(map(sum, self._terms))

    def max_degree_terms(self):
        """All terms of maximal total degree, in decreasing grlex order."""
        deg = self.total_degree()
        return [t for t in self.sorted_terms() if t.degree == deg]

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.domain.name}, {self.nvars}, {str(self)!r})"


def _power(cache, base, e):
    if e not in cache:
        cache[e] = base ** e
    return cache[e]


def evaluate(p, point):
    return p.evaluate(point)


def total_degree(p):
    return p.total_degree()


def max_degree_terms(p):
    return p.max_degree_terms()


def select_leading_term(p, requested=None):
    """Pick a term of maximal total degree.

    Without *requested* this is the grlex-largest such term.  With it, the
    term whose exponents equal *requested*; it must exist and be of maximal
    total degree.
    """
    leading = p.max_degree_terms()
    if requested is None:
        return leading[0]
    requested = tuple(requested)
    deg = leading[0].degree
    if len(requested) != p.nvars:
        raise InputError(f"requested exponents {requested} do not have {p.nvars} entries")
    if requested not in p.terms:
        raise InputError(f"no term with exponents {requested} in f; max degree is {deg}")
    if sum(requested) != deg:
        raise InputError(
            f"term with exponents {requested} has degree {sum(requested)}, max degree is {deg}")
    return Term(p.terms[requested], requested)


def _format_monomial(exps):
    parts = []
    for k, e in enumerate(exps, 1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def format_term(coeff, exps):
    mono = _format_monomial(exps)
    n = coeff.as_int()
    if n is None:
        return f"({coeff})" + (f"*{mono}" if mono else "")
    if not mono:
        return str(n)
    if n == 1:
        return mono
    if n == -1:
        return "-" + mono
    return f"{n}*{mono}"


def format_polynomial(p):
    terms = p.sorted_terms()
    if not terms:
        return "0"
    out = format_term(*terms[0])
    for c, e in terms[1:]:
        s = format_term(c, e)
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def parse_polynomial(text, domain, nvars=None, offset=0):
    """Parse *text* into a polynomial over *domain*.

    Variables are ``x1``, ``x2``, ...; over ``ZZ_t`` the name ``t`` denotes
    the domain element ``t``.  When *nvars* is omitted the arity is the
    largest variable index used.
    """
    used = 0
    for kind, tok, pos in tokenize(text, offset):
        k = _variable_index(tok) if kind == "NAME" else None
        if k is not None:
            if k == 0:
                raise ParseError("variables are numbered from x1", text, pos)
            if nvars is not None and k > nvars:
                raise ParseError(f"variable x{k} exceeds the {nvars} available axes", text, pos)
            used = max(used, k)
    n = used if nvars is None else nvars
    constants = domain.names()

    def integer(v):
        return Polynomial.constant(domain, n, v)

    def name(ident, pos):
        k = _variable_index(ident)
        if k is not None:
            return Polynomial.variable(domain, n, k)
        if ident in constants:
            return Polynomial.constant(domain, n, constants[ident])
        raise ParseError(f"unknown name {ident!r}", text, pos)

    return ExpressionParser(integer, name).parse(text, offset)


def _variable_index(ident):
    if len(ident) > 1 and ident[0] == "x" and ident[1:].isdigit():
        return int(ident[1:])
    return None
