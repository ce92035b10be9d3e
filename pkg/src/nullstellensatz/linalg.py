"""Dense square matrices over an integral domain.

Two determinant algorithms are provided.  :func:`determinant_cofactor` is
division-free Laplace expansion and works in any commutative ring; it is the
reference.  :func:`determinant_bareiss` is fraction-free elimination and
needs the domain to support ``exact_div``.

Indices passed to :func:`minor` and :func:`cofactor` are 1-based, matching
the usual ``a_ij`` notation; ``Matrix.rows`` is an ordinary 0-based tuple.
"""

from functools import lru_cache

from .errors import DuplicateElementError, IntegrityError, InternalError, UsageError


class Matrix:
    __slots__ = ("domain", "rows")

    def __init__(self, rows, domain=None):
        rows = [list(r) for r in rows]
        m = len(rows)
        if m == 0:
            raise UsageError("matrix order must be positive")
        if any(len(r) != m for r in rows):
            raise UsageError("matrix must be square")
        if domain is None:
            domain = _infer_domain(x for r in rows for x in r)
        self.domain = domain
        self.rows = tuple(tuple(domain.coerce(x) for x in r) for r in rows)

    @property
    def order(self):
        return len(self.rows)

    def entry(self, i, j):
        """The entry ``a_ij`` (1-based)."""
        _check_index(self, i, j)
        return self.rows[i - 1][j - 1]

    def swap_rows(self, i, j):
        rows = list(self.rows)
        rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
        return Matrix(rows, self.domain)

    def transpose(self):
        return Matrix(zip(*self.rows), self.domain)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.domain is other.domain and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows)
        return f"Matrix([{body}])"


def _infer_domain(values):
    from .ring import ZZ

    for x in values:
        domain = getattr(x, "domain", None)
        if domain is not None:
            return domain
    return ZZ


def _check_index(M, i, j):
    m = M.order
    if not (1 <= i <= m and 1 <= j <= m):
        raise UsageError(f"index ({i}, {j}) out of range for order {m}")


def as_elements(values, domain=None):
    """Coerce a sequence to a tuple of elements of one domain."""
    values = list(values)
    if domain is None:
        domain = _infer_domain(values)
    return tuple(domain.coerce(v) for v in values), domain


def check_distinct(points):
    seen = {}
    for pos, s in enumerate(points):
        if s in seen:
            raise DuplicateElementError(s, seen[s], pos)
        seen[s] = pos


def vandermonde_matrix(points, domain=None):
    """The matrix with entry ``(i, j) = s_j^(i-1)``; row 1 is all ones."""
    points, domain = as_elements(points, domain)
    if not points:
        raise UsageError("Vandermonde matrix needs at least one point")
    check_distinct(points)
    m = len(points)
    rows = []
    current = [domain.one] * m
    for _ in range(m):
        rows.append(current)
        current = [c * s for c, s in zip(current, points)]
    return Matrix(rows, domain)


def determinant_cofactor(M):
    """Laplace expansion along the first row, recursively.

    Sub-determinants are shared between branches: the minor reached after
    expanding rows ``0..k-1`` depends only on which columns remain, so it is
    cached on that column tuple.
    """
    rows = M.rows
    zero, one = M.domain.zero, M.domain.one

    @lru_cache(maxsize=None)
    def det(k, cols):
        if not cols:
            return one
        total = zero
        for pos, j in enumerate(cols):
            a = rows[k][j]
            if a.is_zero():
                continue
            term = a * det(k + 1, cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
        return total

    return det(0, tuple(range(M.order)))


def determinant_bareiss(M):
    domain = M.domain
    if not domain.has_exact_div:
        raise UsageError(f"{domain.name} has no exact division; use determinant_cofactor")
    n = M.order
    a = [list(r) for r in M.rows]
    negate = False
    prev = domain.one
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    negate = not negate
                    break
            else:
                return domain.zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                try:
                    row_i[j] = (row_i[j] * pivot - lead * row_k[j]).exact_div(prev)
                except IntegrityError as exc:
                    raise InternalError(f"Bareiss step k={k} not exact: {exc}") from exc
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if negate else det


def determinant(M):
    """Bareiss when the domain divides exactly, else cofactor expansion."""
    if M.domain.has_exact_div:
        return determinant_bareiss(M)
    return determinant_cofactor(M)


def minor(M, i, j):
    """``A^(ij)``: *M* with row *i* and column *j* deleted (1-based)."""
    _check_index(M, i, j)
    if M.order == 1:
        raise UsageError("a 1x1 matrix has no nonempty minor")
    rows = [r[:j - 1] + r[j:] for k, r in enumerate(M.rows) if k != i - 1]
    return Matrix(rows, M.domain)


def cofactor(M, i, j):
    """``(-1)^(i+j) det(A^(ij))``; for order 1 the empty determinant is 1."""
    _check_index(M, i, j)
    if M.order == 1:
        return M.domain.one
    d = determinant(minor(M, i, j))
    return -d if (i + j) % 2 else d


def laplace_expansion(M, *, row=None, column=None):
    """Expand the determinant along one row or one column (1-based)."""
    if (row is None) == (column is None):
        raise UsageError("give exactly one of row or column")
    m = M.order
    total = M.domain.zero
    for k in range(1, m + 1):
        i, j = (row, k) if row is not None else (k, column)
        total = total + M.entry(i, j) * cofactor(M, i, j)
    return total


def vandermonde_det_product(points, domain=None):
    """``prod_{i<j} (s_j - s_i)``, equal to ``det(vandermonde_matrix(points))``."""
    points, domain = as_elements(points, domain)
    check_distinct(points)
    result = domain.one
    for j in range(len(points)):
        for i in range(j):
            result = result * (points[j] - points[i])
    return result


def pairwise_difference_product(points, domain=None):
    """``prod_{i<j} (s_i - s_j)``.

    Differs from the Vandermonde determinant by ``(-1)^(m(m-1)/2)``.
    """
    points, domain = as_elements(points, domain)
    check_distinct(points)
    result = domain.one
    for j in range(len(points)):
        for i in range(j):
            result = result * (points[i] - points[j])
    return result
