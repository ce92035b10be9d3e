"""Nonvanishing certificates for polynomials on product grids.

For a finite set ``S = (s_1, ..., s_m)`` of distinct domain elements the
bottom-row cofactors ``lambda_j = cofactor(V, m, j)`` of the Vandermonde
matrix ``V`` satisfy

    sum_j lambda_j * s_j^l == 0        for 0 <= l <= m - 2
    sum_j lambda_j * s_j^(m-1) == r    with r = det(V) != 0

(Cramer's rule with right-hand side ``(0, ..., 0, det V)``, no division).
Weighting every point of a grid ``S_1 x ... x S_n`` by the product of its
per-axis lambdas gives a linear form ``phi`` that kills every monomial with
some exponent below ``|S_k| - 1`` and sends ``x1^d1 ... xn^dn`` with
``d_k = |S_k| - 1`` to ``r_1 ... r_n``.  So if ``c * x^d`` is a term of
maximal total degree in ``f`` and ``|S_k| = d_k + 1``, then
``phi(f) = c * r_1 ... r_n != 0`` and ``f`` cannot vanish on the whole grid.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .errors import GridSizeError, InputError, InternalError, UsageError
from .linalg import as_elements, check_distinct, cofactor, determinant, vandermonde_matrix
from .multipoly import Polynomial, Term, select_leading_term

#: Grids up to this many points get phi computed both ways during certification.
CROSSCHECK_LIMIT = 10 ** 4


class EvaluationSet:
    """An ordered, duplicate-free, nonempty list of domain elements."""

    __slots__ = ("domain", "points")

    def __init__(self, points, domain=None):
        if isinstance(points, EvaluationSet):
            points = points.points
        points, domain = as_elements(points, domain)
        if not points:
            raise InputError("an evaluation set must be nonempty")
        check_distinct(points)
        self.domain = domain
        self.points = points

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        if isinstance(other, EvaluationSet):
            return self.domain is other.domain and self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"EvaluationSet([{', '.join(map(str, self.points))}])"


class GridSpec:
    """The product grid ``S_1 x ... x S_n``, scanned in row-major order."""

    __slots__ = ("axes",)

    def __init__(self, axes, domain=None):
        axes = [a if isinstance(a, EvaluationSet) else EvaluationSet(a, domain) for a in axes]
        if not axes:
            raise InputError("a grid needs at least one axis")
        domains = {a.domain for a in axes}
        if len(domains) > 1:
            raise UsageError("grid axes live in different domains")
        self.axes = tuple(axes)

    @property
    def domain(self):
        return self.axes[0].domain

    @property
    def nvars(self):
        return len(self.axes)

    @property
    def size(self):
        n = 1
        for a in self.axes:
            n *= len(a)
        return n

    def __len__(self):
        return len(self.axes)

    def __iter__(self):
        return iter(self.axes)

    def points(self):
        return product(*(a.points for a in self.axes))

    def __repr__(self):
        return f"GridSpec({list(self.axes)!r})"


@dataclass(frozen=True)
class LambdaFamily:
    """Coefficients ``lambda_j`` for one evaluation set, with their origin.

    ``cofactor_indices[j]`` is the ``(row, column)`` position in the
    Vandermonde matrix whose cofactor gave ``coefficients[j]``.
    """

    points: EvaluationSet
    coefficients: tuple
    top_value: object
    cofactor_indices: tuple

    @property
    def size(self):
        return len(self.points)

    def power_sum(self, exponent):
        """``sum_j lambda_j * s_j^exponent``."""
        total = self.points.domain.zero
        for lam, s in zip(self.coefficients, self.points):
            total = total + lam * s ** exponent
        return total


@dataclass(frozen=True)
class PowerSumCheck:
    exponent: int
    expected: object
    actual: object

    @property
    def passed(self):
        return self.actual == self.expected


@dataclass(frozen=True)
class LambdaReport:
    checks: tuple
    top_nonzero: bool

    @property
    def ok(self):
        return self.top_nonzero and all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]


def lambda_family(points, domain=None):
    S = points if isinstance(points, EvaluationSet) else EvaluationSet(points, domain)
    V = vandermonde_matrix(S.points, S.domain)
    m = len(S)
    coefficients = tuple(cofactor(V, m, j) for j in range(1, m + 1))
    fam = LambdaFamily(
        points=S,
        coefficients=coefficients,
        top_value=determinant(V),
        cofactor_indices=tuple((m, j) for j in range(1, m + 1)),
    )
    report = verify_lambda_family(fam)
    if not report.ok:
        raise InternalError(f"cofactor family for {S!r} fails power-sum checks: {report.failures}")
    return fam


def verify_lambda_family(fam):
    """Check every power-sum identity of *fam* separately.

    Exponents ``0..m-2`` must give zero, exponent ``m-1`` must give
    ``fam.top_value``, and ``top_value`` must be nonzero.
    """
    zero = fam.points.domain.zero
    m = fam.size
    checks = [PowerSumCheck(l, zero, fam.power_sum(l)) for l in range(m - 1)]
    checks.append(PowerSumCheck(m - 1, fam.top_value, fam.power_sum(m - 1)))
    return LambdaReport(tuple(checks), not fam.top_value.is_zero())


class _GridEvaluator:
    """Evaluate one polynomial at grid points given by per-axis indices.

    Powers ``s^e`` are tabulated once per axis element.
    """

    def __init__(self, f, grid):
        self.terms = list(f.terms.items())
        self.zero = f.domain.zero
        top = [max((e[k] for e in f.terms), default=0) for k in range(f.nvars)]
        self.powers = []
        for k, axis in enumerate(grid.axes):
            table = []
            for s in axis:
                row = [f.domain.one]
                for _ in range(top[k]):
                    row.append(row[-1] * s)
                table.append(row)
            self.powers.append(table)

    def value(self, index):
        total = self.zero
        for exps, c in self.terms:
            v = c
            for k, e in enumerate(exps):
                if e:
                    v = v * self.powers[k][index[k]][e]
            total = total + v
        return total


def _check_arity(f, grid, fams=None):
    if f.nvars != grid.nvars:
        raise UsageError(f"polynomial has {f.nvars} variables, grid has {grid.nvars} axes")
    if f.domain is not grid.domain:
        raise UsageError("polynomial and grid live in different domains")
    if fams is not None:
        if len(fams) != grid.nvars:
            raise UsageError(f"{len(fams)} lambda families for {grid.nvars} axes")
        for k, (fam, axis) in enumerate(zip(fams, grid.axes), 1):
            if fam.points != axis:
                raise UsageError(f"lambda family {k} was built for a different set")


def _slices(grid, threads):
    """Split the first axis into contiguous index ranges, in order."""
    m = len(grid.axes[0])
    threads = max(1, min(threads, m))
    step, extra = divmod(m, threads)
    out, start = [], 0
    for i in range(threads):
        stop = start + step + (1 if i < extra else 0)
        out.append(range(start, stop))
        start = stop
    return out


def _run_slices(fn, grid, threads):
    slices = _slices(grid, threads)
    if len(slices) == 1:
        return [fn(slices[0])]
    with ThreadPoolExecutor(max_workers=len(slices)) as pool:
        return list(pool.map(fn, slices))


def phi_grid(f, grid, fams, threads=1):
    """``sum over grid points of lambda_{s1} ... lambda_{sn} * f(s1, ..., sn)``.

    Literal definition; costs one evaluation of *f* per grid point.
    """
    _check_arity(f, grid, fams)
    ev = _GridEvaluator(f, grid)
    rest = [range(len(a)) for a in grid.axes[1:]]
    lams = [fam.coefficients for fam in fams]

    def partial(first):
        acc = f.domain.zero
        for i0 in first:
            for tail in product(*rest):
                index = (i0,) + tail
                weight = lams[0][i0]
                for k, i in enumerate(tail, 1):
                    weight = weight * lams[k][i]
                acc = acc + weight * ev.value(index)
        return acc

    total = f.domain.zero
    for part in _run_slices(partial, grid, threads):
        total = total + part
    return total


def phi_term_product(term, fams, _cache=None):
    """``c * prod_k (sum_{s in S_k} lambda_s * s^(d_k'))`` for one term."""
    coeff, exps = term
    if len(exps) != len(fams):
        raise UsageError(f"term has {len(exps)} exponents for {len(fams)} axes")
    value = coeff
    for k, (fam, e) in enumerate(zip(fams, exps)):
        if _cache is None:
            s = fam.power_sum(e)
        else:
            s = _cache.get((k, e))
            if s is None:
                s = _cache[(k, e)] = fam.power_sum(e)
        value = value * s
    return value


def phi_fast(f, fams):
    """Phi of *f* evaluated term by term via per-axis power sums."""
    if len(fams) != f.nvars:
        raise UsageError(f"polynomial has {f.nvars} variables, got {len(fams)} lambda families")
    cache = {}
    total = f.domain.zero
    for exps, c in f.terms.items():
        total = total + phi_term_product(Term(c, exps), fams, cache)
    return total


def find_witness(f, grid, threads=1):
    """First grid point (row-major) where *f* is nonzero, or ``None``.

    Pure scan; does not rely on the size hypothesis.  Returns
    ``(point, value)``.
    """
    _check_arity(f, grid)
    ev = _GridEvaluator(f, grid)
    rest = [range(len(a)) for a in grid.axes[1:]]

    def scan(first):
        for i0 in first:
            for tail in product(*rest):
                index = (i0,) + tail
                v = ev.value(index)
                if not v.is_zero():
                    return index, v
        return None

    for hit in _run_slices(scan, grid, threads):
        if hit is not None:
            index, v = hit
            return tuple(axis[i] for axis, i in zip(grid.axes, index)), v
    return None


@dataclass(frozen=True)
class Certificate:
    polynomial: Polynomial
    grid: GridSpec
    term: Term
    r_values: tuple
    phi: object
    predicted: object
    phi_grid: Optional[object]
    witness: Optional[tuple]
    witness_value: Optional[object]
    families: tuple = field(default=(), compare=False, repr=False)

    @property
    def grid_size(self):
        return self.grid.size

    @property
    def certified(self):
        return (self.phi == self.predicted and not self.phi.is_zero()
                and self.witness_value is not None and not self.witness_value.is_zero())


def check_grid_sizes(exponents, grid):
    for k, (d, axis) in enumerate(zip(exponents, grid.axes), 1):
        if len(axis) != d + 1:
            raise GridSizeError(k, d + 1, len(axis))


def certify_nonvanishing(f, grid, requested=None, threads=1, crosscheck_limit=CROSSCHECK_LIMIT):
    """Prove that *f* has a nonzero value on *grid* and find one.

    Raises :class:`GridSizeError` unless ``|S_k| = d_k + 1`` for the chosen
    leading term ``c * x^d``.
    """
    if f.is_zero():
        raise InputError("the zero polynomial vanishes everywhere; nothing to certify")
    _check_arity(f, grid)
    term = select_leading_term(f, requested)
    check_grid_sizes(term.exponents, grid)

    fams = tuple(lambda_family(axis) for axis in grid.axes)
    phi = phi_fast(f, fams)
    by_grid = None
    if grid.size <= crosscheck_limit:
        by_grid = phi_grid(f, grid, fams, threads=threads)
        if by_grid != phi:
            raise InternalError(f"phi by grid sum {by_grid} != phi by products {phi}")

    predicted = term.coeff
    for fam in fams:
        predicted = predicted * fam.top_value
    if phi != predicted:
        raise InternalError(f"phi(f) = {phi} but c * prod r_k = {predicted}")
    if phi.is_zero():
        raise InternalError("phi(f) is zero; the domain has zero divisors")

    hit = find_witness(f, grid, threads=threads)
    if hit is None:
        raise InternalError("phi(f) != 0 but f vanishes on the whole grid")
    witness, value = hit
    return Certificate(
        polynomial=f,
        grid=grid,
        term=term,
        r_values=tuple(fam.top_value for fam in fams),
        phi=phi,
        predicted=predicted,
        phi_grid=by_grid,
        witness=witness,
        witness_value=value,
        families=fams,
    )
