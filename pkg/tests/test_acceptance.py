"""Exit criteria.  Each test prints one ``ACCEPTANCE`` line with its verdict.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines
inline; they are also echoed in the terminal summary.
"""

import math
import random
import statistics
import time

import pytest

from dynnikov import (
    BraidGenerator,
    DynnikovCoordinates,
    MoveKind,
    alpha_numbers,
    apply_generator_standard,
    apply_word,
    beta_numbers,
    complexity,
    count_components,
    is_central,
    oracle_count,
    validate,
)
from dynnikov.bench import SAFE_INT_BITS, bench_cell
from dynnikov.reduction import MOVES

from conftest import GOLDEN, ext, random_coords

SEED = 1_000_003

GOLDEN_STATES = [
    ext((0, -1, -2, -2, 1, 0), (-3, -1, 2, -2, 2, 2)),
    ext((0, -1, -2, -2, 1, 0), (-3, 0, 1, -2, 2, 2)),
    ext((0, -2, -2, 1, 0), (-3, 1, -2, 2, 2)),
    ext((0, -1, -2, 1, 0), (-1, -1, -2, 2, 2)),
    ext((0, -1, -1, 0, 0), (-1, -1, 1, -1, 2)),
    ext((0, -1, -1, 0, 0), (-1, 0, 0, -1, 2)),
    ext((0, 0, 0), (-1, -1, 2)),
]

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def traces():
    """Every traced run made by criteria 1-4, for criterion 5."""
    return []


@pytest.fixture(scope="module")
def corpus3():
    rng = random.Random(SEED)
    return [random_coords(rng, n, 20) for n in range(4, 9) for _ in range(5000)]


def test_1_golden_trace(traces):
    count, trace = count_components(GOLDEN, trace=True)
    traces.append((GOLDEN, count, trace))
    # the paper's step 7 fills twice; compare the states it prints
    printed = [r.coords for r in trace.records if r.kind is not MoveKind.FINAL]
    printed = printed[:6] + printed[7:]
    timings = []
    for _ in range(200):
        t0 = time.perf_counter()
        count_components(GOLDEN, trace=True)
        timings.append(time.perf_counter() - t0)
    runtime = statistics.median(timings)
    ok = count == 3 and printed == GOLDEN_STATES and runtime < 1e-3
    report(1, "golden trace reproduces the worked example", ok, f"count={count}, median {runtime * 1e6:.0f} us")


def test_2_three_puncture_law():
    t0 = time.perf_counter()
    bad = []
    for a1 in range(-30, 31):
        for b1 in range(-30, 31):
            if a1 == 0 and b1 == 0:
                continue
            c = DynnikovCoordinates(3, (a1,), (b1,))
            g = math.gcd(a1, b1)
            if count_components(c)[0] != g or oracle_count(c) != g:
                bad.append((a1, b1))
    elapsed = time.perf_counter() - t0
    report(2, "count = oracle = gcd on [-30,30]^2 minus 0", not bad and elapsed < 5, f"{len(bad)} mismatches, {elapsed:.2f} s")


def test_3_oracle_equivalence(corpus3, traces):
    t0 = time.perf_counter()
    bad = 0
    for c in corpus3:
        count, trace = count_components(c, trace=True)
        if count != oracle_count(c):
            bad += 1
        traces.append((c, count, trace))
    elapsed = time.perf_counter() - t0
    report(3, "count = oracle on 5000 random laminations per n in 4..8", bad == 0 and elapsed < 120,
           f"{len(corpus3)} laminations, {bad} mismatches, {elapsed:.1f} s")


def test_4_braid_invariance(traces):
    rng = random.Random(SEED + 4)
    count_bad = inverse_bad = relation_bad = 0
    for _ in range(2000):
        n = rng.randint(3, 8)
        c = random_coords(rng, n, 20)
        word = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 50))]
        d = apply_word(c, word)
        k0, t0 = count_components(c, trace=True)
        k1, t1 = count_components(d, trace=True)
        traces.append((c, k0, t0))
        traces.append((d, k1, t1))
        count_bad += k0 != k1

        g = BraidGenerator(rng.randint(1, n - 1), rng.choice((1, -1)))
        inverse_bad += apply_generator_standard(apply_generator_standard(c, g), g.inverse()) != c

        i = rng.randint(1, n - 1)
        s = rng.choice((1, -1))
        for j in range(1, n):
            if abs(i - j) >= 2:
                relation_bad += apply_word(c, [s * i, s * j]) != apply_word(c, [s * j, s * i])
        if i <= n - 2:
            relation_bad += apply_word(c, [s * i, s * (i + 1), s * i]) != apply_word(c, [s * (i + 1), s * i, s * (i + 1)])
    ok = count_bad == inverse_bad == relation_bad == 0
    report(4, "braid action preserves counts, inverses cancel, braid relations hold", ok,
           f"count {count_bad}, inverse {inverse_bad}, relations {relation_bad} failures")


def test_5_descent_and_conservation(traces):
    assert traces, "criteria 1-4 must run first"
    descent_bad = central_bad = conservation_bad = 0
    states = 0
    for c, count, trace in traces:
        prev = None
        for r in trace.records:
            e = r.coords
            states += 1
            if not (e.a[0] == e.a[-1] == 0 and is_central(e)):
                central_bad += 1
            if oracle_count(e) + r.y != count:
                conservation_bad += 1
            now = complexity(e)
            if r.kind in MOVES and not now < prev:
                descent_bad += 1
            prev = now
    ok = descent_bad == central_bad == conservation_bad == 0
    report(5, "complexity descends, states stay central, oracle + Y is constant", ok,
           f"{len(traces)} traces, {states} states; failures: descent {descent_bad}, "
           f"central {central_bad}, conservation {conservation_bad}")


def test_6_move_bound(corpus3):
    worst = 0.0
    over = 0
    for c in corpus3:
        _, trace = count_components(c)
        bound = 16 * c.n * (c.size + 1)
        over += trace.moves > bound
        worst = max(worst, trace.moves / bound)
    report(6, "moves <= 16 n (M + 1)", over == 0, f"worst ratio {worst:.4f}")


def test_7_reconstruction_identities():
    rng = random.Random(SEED + 7)
    bad = 0
    total = 12000
    for _ in range(total):
        c = random_coords(rng, rng.randint(3, 8), 20)
        beta = beta_numbers(c)
        alpha = alpha_numbers(c, beta)
        ok = all(beta[i] - beta[i + 1] == 2 * c.b[i] for i in range(c.n - 2))
        ok &= all(alpha[2 * i + 1] - alpha[2 * i] == 2 * c.a[i] for i in range(c.n - 2))
        ok &= all(x >= 0 for x in alpha + beta) and all(x % 2 == 0 for x in beta)
        bad += not ok
    report(7, "reconstruction identities on random coordinates", bad == 0, f"{total} vectors, {bad} failures")


def test_8_performance_smoke():
    big = bench_cell(100, 1000, 100, seed=SEED)
    small = bench_cell(10, 10, 1000, seed=SEED)
    bits = max(big.max_int_bits, small.max_int_bits)
    ok = big.mean_s < 0.1 and small.mean_s < 0.01 and bits <= SAFE_INT_BITS
    report(8, "bench cells within the timing budget and integer width", ok,
           f"n=100,R=1000 mean {big.mean_s:.2e} s; n=10,R=10 mean {small.mean_s:.2e} s; "
           f"max {bits} bits <= {SAFE_INT_BITS}")


def test_golden_closing_vector_is_checked_against_oracle():
    c = validate(6, [-1, -2, -1, 0], [-1, 2, 1, -1])
    assert count_components(c)[0] == oracle_count(c)
