"""Timing comparisons between the paired algorithms.

Each benchmark runs every algorithm on the same instance, records the
median wall-clock time over the repetitions, and reports whether all
outputs are exactly equal.  Timings are informational only.
"""

import random
import statistics
import time
from dataclasses import dataclass

from .errors import CapExceededError
from .linalg import determinant_bareiss, determinant_cofactor, vandermonde_det_product, vandermonde_matrix
from .multipoly import Polynomial
from .nonvanishing import GridSpec, lambda_family, phi_fast, phi_grid
from .ring import ZZ, ZZ_t, IntPoly

MAX_ORDER = 10
MAX_GRID_POINTS = 10 ** 6


@dataclass
class Timing:
    algorithm: str
    median_seconds: float
    operations: int
    result: object


@dataclass
class BenchResult:
    name: str
    timings: list

    @property
    def equal(self):
        first = self.timings[0].result
        return all(t.result == first for t in self.timings[1:])


def _median_time(fn, reps):
    samples = []
    result = None
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def bench_points(order, domain):
    if domain is ZZ_t:
        return [IntPoly((j * j, j)) for j in range(order)]  # j*t + j^2
    return [domain(j) for j in range(order)]


def bench_determinant(order, reps=3, domain=ZZ):
    if not 1 <= order <= MAX_ORDER:
        raise CapExceededError(f"determinant order must be in 1..{MAX_ORDER}, got {order}")
    points = bench_points(order, domain)
    V = vandermonde_matrix(points, domain)
    timings = []
    for name, fn, ops in [
        ("cofactor", lambda: determinant_cofactor(V), order * 2 ** max(order - 1, 0)),
        ("bareiss", lambda: determinant_bareiss(V), sum(k * k for k in range(order))),
        ("product", lambda: vandermonde_det_product(points, domain), order * (order - 1) // 2),
    ]:
        t, result = _median_time(fn, reps)
        timings.append(Timing(name, t, ops, result))
    return BenchResult(f"det Vandermonde order {order} over {domain.name}", timings)


def bench_polynomial(sizes, domain=ZZ, seed=0, extra_terms=4):
    """Random polynomial whose top term is ``x1^(m1-1) ... xn^(mn-1)``."""
    rng = random.Random(seed)
    n = len(sizes)
    top = tuple(m - 1 for m in sizes)
    terms = {top: domain(rng.choice([-3, -2, -1, 1, 2, 3]))}
    for _ in range(extra_terms):
        exps = tuple(rng.randint(0, m - 1) for m in sizes)
        terms[exps] = domain(rng.randint(-9, 9))
    return Polynomial(domain, n, terms)


def bench_grid(sizes, reps=3, domain=ZZ, seed=0):
    sizes = list(sizes)
    points_total = 1
    for m in sizes:
        points_total *= m
    if not sizes or min(sizes) < 1 or points_total > MAX_GRID_POINTS:
        raise CapExceededError(f"grid must have 1..{MAX_GRID_POINTS} points, got {points_total}")
    rng = random.Random(seed)
    axes = []
    for m in sizes:
        values = rng.sample(range(-3 * m, 3 * m + 1), m)
        if domain is ZZ_t:
            axes.append([IntPoly((v, rng.randint(-1, 1))) for v in values])
        else:
            axes.append([domain(v) for v in values])
    grid = GridSpec(axes, domain)
    f = bench_polynomial(sizes, domain, seed)
    fams = [lambda_family(a) for a in grid.axes]
    nterms = len(f.terms)
    timings = []
    for name, fn, ops in [
        ("grid-sum", lambda: phi_grid(f, grid, fams), points_total * nterms),
        ("product-form", lambda: phi_fast(f, fams), sum(sizes) * nterms),
    ]:
        t, result = _median_time(fn, reps)
        timings.append(Timing(name, t, ops, result))
    label = "x".join(map(str, sizes))
    return BenchResult(f"phi on {label} grid over {domain.name}", timings)


def format_table(results):
    lines = [f"{'benchmark':<40} {'algorithm':<14} {'median s':>12} {'ops':>10}  result"]
    for res in results:
        for t in res.timings:
            lines.append(f"{res.name:<40} {t.algorithm:<14} {t.median_seconds:>12.6f} "
                         f"{t.operations:>10}  {t.result}")
        lines.append(f"{res.name:<40} {'outputs':<14} {'equal' if res.equal else 'DIFFER':>12}")
    return "\n".join(lines) + "\n"


def bench_records(results):
    records = []
    for res in results:
        records.append([
            ("kind", "bench"),
            ("benchmark", res.name),
            ("algorithms", [t.algorithm for t in res.timings]),
            ("median_seconds", [f"{t.median_seconds:.6f}" for t in res.timings]),
            ("operations", [t.operations for t in res.timings]),
            ("results", [t.result for t in res.timings]),
            ("equal", "true" if res.equal else "false"),
        ])
    return records
