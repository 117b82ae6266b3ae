"""Acceptance criteria, one test each, run at the stated tolerances.

Each test records a PASS/FAIL line that the terminal summary prints at the end
of the session, then asserts.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from palettekit import (
    P_3T,
    P_4_81,
    P_LM,
    P_TWO_COLOR,
    Hypergraph,
    brute_force_lagrangian,
    check_certificate,
    colorable,
    density,
    density_bound_481,
    exists_hom,
    gradient,
    inverse,
    lagrangian,
    multi_condition,
    objective,
    ordered_colorable,
    product,
    random_palette_hypergraph,
    symmetrize,
)
from palettekit.conditions import SeparationQuery, random_palette, witness_search

import conftest
from conftest import brute_homs, brute_ordered_colorable, rand_hypergraph, rand_palette

FOUR_81 = Fraction(4, 81)
K4_MINUS = Hypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def record(name, ok, detail=""):
    conftest.ACCEPTANCE_RESULTS.append((name, bool(ok), detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_1_lagrangian_481():
    t0 = time.perf_counter()
    res = lagrangian(P_4_81)
    grid = brute_force_lagrangian(P_4_81, 9)
    dt = time.perf_counter() - t0
    ok = abs(res.value - 4 / 81) <= 1e-6 and grid == FOUR_81 and dt < 10
    record("1 lagrangian(P_4_81) = 4/81", ok, f"value={res.value:.12f} grid={grid} time={dt:.2f}s")


def test_criterion_2_hom_absence():
    t0 = time.perf_counter()
    sources = [product([P_LM, symmetrize(P_3T)]), product([P_3T, symmetrize(P_LM)])]
    found = [exists_hom(s, t) for s in sources for t in (P_4_81, inverse(P_4_81))]
    dt = time.perf_counter() - t0
    ok = all(f is None for f in found) and dt < 60
    record("2 four homomorphism absences", ok, f"homs found={sum(f is not None for f in found)} time={dt:.3f}s")


def test_criterion_3_k4_minus():
    t0 = time.perf_counter()
    p, ip = P_TWO_COLOR, inverse(P_TWO_COLOR)
    a, b = colorable(K4_MINUS, p), colorable(K4_MINUS, ip)
    c = colorable(K4_MINUS, product([p, ip]))
    dt = time.perf_counter() - t0
    ok = (
        a is not None
        and b is not None
        and check_certificate(K4_MINUS.ordered(a[0]), p, a[1])
        and check_certificate(K4_MINUS.ordered(b[0]), ip, b[1])
        and c is None
        and dt < 5
    )
    record("3 K4^- colorable by P and inv(P), not by the product", ok, f"time={dt:.3f}s")


def test_criterion_4_symmetrization_necessity():
    # Stated as written. The solver and a brute-force check over all maps both
    # find no homomorphism from either mixed product, so this is expected to fail.
    p = P_TWO_COLOR
    target = product([p, inverse(p)])
    verdict = multi_condition([p, inverse(p)], target)
    w = witness_search(SeparationQuery([p], [target]), 4)
    ok = (not verdict.separable) and bool(verdict.certificates) and w is not None
    record(
        "4 multi_condition([P, inv P], P x inv P) not separable + witness",
        ok,
        f"separable={verdict.separable} certificates={len(verdict.certificates)} witness={'yes' if w else 'no'}",
    )


def test_criterion_5_above_481_randomized():
    rng = random.Random(481)
    cases = blocked = violations = 0
    for _ in range(10_000):
        p = random_palette(rng, max_colors=5)
        r = density_bound_481(p)
        cases += 1
        if r.bound_holds:
            blocked += 1
            if density(p) > FOUR_81:
                violations += 1
    record(
        "5 density <= 4/81 when all three hom tests fail",
        violations == 0,
        f"cases={cases} all-tests-failed={blocked} violations={violations}",
    )


def _sym_closure_ok(p):
    s = symmetrize(p)
    k = p.size
    bar = lambda c: (c + k) % (2 * k)  # noqa: E731
    for x, y, z in s.triples:
        images = {(x, y, z), (bar(x), z, y), (y, x, bar(z)), (bar(y), bar(z), x), (z, bar(x), bar(y)),
                  (bar(z), bar(y), bar(x))}
        if not images <= s.triples:
            return False
    return True


def _prop_cases(n=500):
    rng = random.Random(2024)
    nrng = np.random.default_rng(2024)
    fails = {}

    def check(name, cond):
        fails.setdefault(name, [0, 0])
        fails[name][0] += 1
        if not cond:
            fails[name][1] += 1

    for _ in range(n):
        p = rand_palette(rng, 4)
        check("inverse involution", inverse(inverse(p)) == p)

        q = rand_palette(rng, 3)
        check("product density", density(product([p, q])) == density(p) * density(q))

        s = symmetrize(p)
        card = s.size == 2 * p.size and (not p.triples or len(p.triples) <= len(s.triples) <= 6 * len(p.triples))
        check("sym cardinality and closure", card and _sym_closure_ok(p))

        x = nrng.dirichlet(np.ones(p.size))
        h = 1e-6
        fd = np.array([
            (objective(p, x + h * e) - objective(p, x - h * e)) / (2 * h) for e in np.eye(p.size)
        ])
        check("gradient vs finite differences", np.max(np.abs(fd - gradient(p, x))) <= 1e-5)

        check("density <= lagrangian", float(density(p)) <= lagrangian(p, restarts=5).value + 1e-12)

        a, b = rand_palette(rng, 4, 8), rand_palette(rng, 4, 24)
        truth = brute_homs(a, b)
        f = exists_hom(a, b)
        check("hom solver vs enumeration", (f is None) == (not truth) and (f is None or f.mapping in truth))

        nv = rng.randint(0, 4)
        oh = rand_hypergraph(rng, nv).ordered(rng.sample(range(nv), nv))
        c2 = rand_palette(rng, 2)
        cert = ordered_colorable(oh, c2)
        check(
            "ordered colorable vs enumeration",
            (cert is not None) == brute_ordered_colorable(oh, c2) and (cert is None or check_certificate(oh, c2, cert)),
        )

        c3, c4 = rand_palette(rng, 2), rand_palette(rng, 2)
        dual = (ordered_colorable(oh, c3) is None) == (ordered_colorable(oh.reversed(), inverse(c3)) is None)
        both = ordered_colorable(oh, c3) is not None and ordered_colorable(oh, c4) is not None
        conj = (ordered_colorable(oh, product([c3, c4])) is not None) == both
        check("inverse duality and product conjunction", dual and conj)

        # certificate transport along a homomorphism
        while True:
            src, dst = rand_palette(rng, 3, 5), rand_palette(rng, 3, 16)
            hom = exists_hom(src, dst)
            if hom is not None and src.triples:
                break
        hg, col = random_palette_hypergraph(src, rng.randint(3, 7), seed=rng.randrange(10 ** 6))
        check("certificate transport", check_certificate(hg, dst, col.mapped(hom.mapping, dst)))
    return fails


def test_criterion_6_property_suites():
    fails = _prop_cases()
    ok = all(total >= 500 and bad == 0 for total, bad in fails.values())
    detail = "; ".join(f"{k}: {t - b}/{t}" for k, (t, b) in fails.items())
    record("6 property suites", ok, detail)


def test_criterion_7_verify_481_cli():
    t0 = time.perf_counter()
    r = subprocess.run([sys.executable, "-m", "palettekit", "verify-481"], capture_output=True, text=True)
    dt = time.perf_counter() - t0
    items = [line for line in r.stdout.splitlines() if line.startswith(("[PASS]", "[FAIL]"))]
    ok = r.returncode == 0 and len(items) == 5 and all(i.startswith("[PASS]") for i in items) and dt < 120
    record("7 verify-481 end to end", ok, f"exit={r.returncode} items={len(items)} time={dt:.2f}s")


def test_criterion_8_random_construction():
    rng = random.Random(8)
    bad = 0
    for case in range(1000):
        p = rand_palette(rng, 4)
        h, c = random_palette_hypergraph(p, rng.randint(0, 12), seed=case)
        if not check_certificate(h, p, c):
            bad += 1
    dist = [2 / 9, 1 / 3, 2 / 9, 2 / 9]
    dens = [
        len(random_palette_hypergraph(P_4_81, 60, dist, seed=s)[0].base.edges) / math.comb(60, 3)
        for s in range(20)
    ]
    mean = float(np.mean(dens))
    ok = bad == 0 and abs(mean - 4 / 81) <= 0.005
    record("8 random construction", ok, f"bad certificates={bad}/1000 mean density={mean:.6f} vs {4 / 81:.6f}")
