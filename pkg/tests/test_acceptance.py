"""Acceptance criteria, one test each.

Every comparison is exact equality of domain elements; there is no
tolerance anywhere.  Run with ``pytest tests/test_acceptance.py -s`` to see
one PASS/FAIL line per criterion.
"""

import io
import random
from itertools import combinations

import pytest

from nullstellensatz import (ZZ, ZZ_t, GridSpec, IntPoly, Matrix, Polynomial, certify_nonvanishing,
                             determinant_bareiss, determinant_cofactor, find_witness,
                             lambda_family, parse_polynomial, phi_fast, phi_grid,
                             vandermonde_matrix, verify_lambda_family)
from nullstellensatz.bench import bench_determinant, bench_grid
from nullstellensatz.cli import EXIT_SIZE, main

from oracles import brute_phi, cramer_lambda, leibniz_det


@pytest.fixture
def criterion(capsys):
    def report(number, title, ok, detail=""):
        with capsys.disabled():
            mark = "PASS" if ok else "FAIL"
            print(f"\n[{mark}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return report


def _lemma_holds(S):
    fam = lambda_family(S)
    rep = verify_lambda_family(fam)
    det = determinant_cofactor(vandermonde_matrix(S))
    return rep.ok and fam.top_value == det and not det.is_zero()


def test_1_lemma_suite(criterion):
    failures = checked = 0
    for k in range(1, 5):
        for S in combinations(range(-3, 4), k):
            for ordering in (S, S[::-1]):
                checked += 1
                failures += not _lemma_holds(ordering)
    rng = random.Random(101)
    for _ in range(100):
        S = rng.sample(range(-50, 51), rng.randint(1, 6))
        checked += 1
        failures += not _lemma_holds(S)
    criterion(1, "cofactor lambda families satisfy both power-sum identities",
              failures == 0, f"{checked} sets, {failures} failures")


def test_2_determinant_oracle_equivalence(criterion):
    rng = random.Random(202)
    mismatches = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        M = Matrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        mismatches += determinant_bareiss(M) != determinant_cofactor(M)
    for _ in range(50):
        n = rng.randint(1, 4)
        M = Matrix([[IntPoly([rng.randint(-9, 9) for _ in range(3)]) for _ in range(n)]
                    for _ in range(n)], ZZ_t)
        mismatches += determinant_bareiss(M) != determinant_cofactor(M)
    criterion(2, "Bareiss == cofactor expansion", mismatches == 0,
              f"200 int + 50 intpoly matrices, {mismatches} mismatches")


def _random_int_instance(rng):
    n = rng.randint(1, 3)
    axes = [rng.sample(range(-5, 6), rng.randint(1, 4)) for _ in range(n)]
    terms = {}
    for _ in range(rng.randint(1, 6)):
        terms[tuple(rng.randint(0, 3) for _ in range(n))] = rng.randint(-9, 9)
    return Polynomial(ZZ, n, terms), GridSpec(axes)


def test_3_phi_oracle_equivalence(criterion):
    rng = random.Random(303)
    mismatches = 0
    for _ in range(300):
        f, grid = _random_int_instance(rng)
        fams = [lambda_family(a) for a in grid.axes]
        mismatches += phi_fast(f, fams) != phi_grid(f, grid, fams)
    criterion(3, "phi by products == phi by grid sum", mismatches == 0,
              f"300 instances, {mismatches} mismatches")


def _hypothesis_instance(rng, domain):
    """Random f with a designated max-degree term c*x^d and a grid with |S_k| = d_k + 1."""
    n = rng.randint(1, 3)
    if domain is ZZ:
        d = tuple(rng.randint(0, 3) for _ in range(n))
        coeff = lambda: rng.randint(-9, 9)
        axes = [rng.sample(range(-5, 6), e + 1) for e in d]
    else:
        n = min(n, 2)
        d = tuple(rng.randint(0, 2) for _ in range(n))
        coeff = lambda: IntPoly([rng.randint(-3, 3) for _ in range(3)])
        axes = []
        for e in d:
            pool = [IntPoly((a, b)) for a in range(-2, 3) for b in range(-1, 2)]
            axes.append(rng.sample(pool, e + 1))
    c = coeff()
    while (c == 0) if domain is ZZ else c.is_zero():
        c = coeff()
    deg = sum(d)
    terms = {}
    for _ in range(rng.randint(0, 6)):
        exps = tuple(rng.randint(0, deg) for _ in range(n))
        if sum(exps) <= deg and exps != d:
            terms[exps] = coeff()
    terms[d] = c
    return Polynomial(domain, n, terms), GridSpec(axes, domain), d, domain(c)


def _reproduce(f, grid, d, c):
    cert = certify_nonvanishing(f, grid, requested=d)
    predicted = c
    for r in cert.r_values:
        predicted = predicted * r
    scan = find_witness(f, grid)
    return (cert.phi == predicted and not cert.phi.is_zero() and scan is not None
            and not f.evaluate(scan[0]).is_zero() and cert.witness == scan[0])


def test_4_theorem_reproduction(criterion):
    rng = random.Random(404)
    ok_int = sum(_reproduce(*_hypothesis_instance(rng, ZZ)) for _ in range(200))
    ok_poly = sum(_reproduce(*_hypothesis_instance(rng, ZZ_t)) for _ in range(50))
    criterion(4, "phi(f) = c*prod r_k != 0 and a witness exists",
              ok_int == 200 and ok_poly == 50, f"int {ok_int}/200, intpoly {ok_poly}/50")


def test_5_hand_traced_goldens(criterion):
    problems = []

    fam = lambda_family([0, 1, 2])
    oracle_lam, oracle_r = cramer_lambda([0, 1, 2])
    if not (list(fam.coefficients) == [1, -2, 1] == oracle_lam and fam.top_value == 2 == oracle_r):
        problems.append("lambda([0,1,2])")

    f = parse_polynomial("x1*x2", ZZ, 2)
    cert = certify_nonvanishing(f, GridSpec([[0, 1], [0, 1]]))
    lam01 = cramer_lambda([0, 1])[0]
    oracle_phi = brute_phi(lambda a, b: a * b, [[0, 1], [0, 1]], [lam01, lam01])
    if not (cert.phi == 1 == oracle_phi and cert.witness == (1, 1)):
        problems.append("certify(x1*x2)")

    t = ZZ_t.t
    g = parse_polynomial("x1 + x2", ZZ_t, 2)
    cert = certify_nonvanishing(g, GridSpec([[0, t], [0]], ZZ_t))
    V = [[ZZ_t.one, ZZ_t.one], [ZZ_t.zero, t]]
    if not (cert.phi == t == leibniz_det(V, ZZ_t.one, ZZ_t.zero) and cert.witness == (t, 0)):
        problems.append("certify over Z[t] with S1=[0,t]")

    criterion(5, "hand-traced goldens", not problems, ", ".join(problems) or "3 goldens")


def test_6_negative_controls(criterion):
    out, err = io.StringIO(), io.StringIO()
    codes = [
        main(["certify", "--poly", "x1*x2", "--sets", "0,1;0"], out, err),
        main(["certify", "--poly", "x1^3 + x2", "--sets", "0,1;5"], out, err),
        main(["certify", "--poly", "x1^2 - x1", "--sets", "0,1"], out, err),
    ]
    f = parse_polynomial("x1^2 - x1", ZZ, 1)
    grid = GridSpec([[0, 1]])
    vanishes = find_witness(f, grid) is None and all(f.evaluate(p).is_zero() for p in grid.points())
    ok = codes == [EXIT_SIZE] * 3 and vanishes
    criterion(6, "undersized grids rejected; x1^2 - x1 vanishes on {0,1}", ok,
              f"exit codes {codes}, vanishes={vanishes}")


def test_7_bench_outputs_equal(criterion):
    results = [bench_determinant(k, reps=1) for k in range(1, 9)]
    results += [bench_determinant(k, reps=1, domain=ZZ_t) for k in range(1, 6)]
    for sizes in ([1], [4], [2, 3], [4, 4, 4], [3, 2, 2, 2], [5, 5]):
        results.append(bench_grid(sizes, reps=1))
        results.append(bench_grid(sizes, reps=1, domain=ZZ_t, seed=1))
    differing = [r.name for r in results if not r.equal]
    criterion(7, "all benchmarked algorithm pairs give equal outputs", not differing,
              f"{len(results)} benchmarks" + (f", differing: {differing}" if differing else ""))
