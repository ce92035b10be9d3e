"""Reference computations that share no code with the package.

They work on plain Python ints (or on IntPoly via its operators only) and
use textbook definitions: Leibniz permutation sums, Gaussian elimination
over the rationals, literal grid sums.
"""

from fractions import Fraction
from itertools import permutations, product


def permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows, one=1, zero=0):
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        term = one
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def rational_solve(A, b):
    """Solve ``A x = b`` over Q by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[pivot] = M[pivot], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [x - factor * y for x, y in zip(M[r], M[col])]
    return [row[n] for row in M]


def cramer_lambda(points):
    """lambda for integer points: solve V lambda = (0, ..., 0, det V) over Q."""
    m = len(points)
    V = [[s ** i for s in points] for i in range(m)]
    d = leibniz_det(V)
    b = [0] * (m - 1) + [d]
    sol = rational_solve(V, b)
    assert all(x.denominator == 1 for x in sol)
    return [int(x) for x in sol], d


def brute_phi(f, axes, lambdas):
    """Literal grid sum with *f* a Python callable on ints."""
    total = 0
    for idx in product(*(range(len(a)) for a in axes)):
        weight = 1
        for k, i in enumerate(idx):
            weight *= lambdas[k][i]
        total += weight * f(*(axes[k][i] for k, i in enumerate(idx)))
    return total


def brute_eval(terms, point):
    """Evaluate ``{exps: int coeff}`` at an int point."""
    total = 0
    for exps, c in terms.items():
        v = c
        for s, e in zip(point, exps):
            v *= s ** e
        total += v
    return total
