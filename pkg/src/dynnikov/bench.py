"""Random coordinate generation and the timing harness."""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, fields
from typing import Iterator, Sequence, TextIO

from .coords import DynnikovCoordinates
from .reduction import count_components

# Largest coordinate magnitude (in bits) allowed during a benchmarked run.
# Every intermediate of a move is a signed sum of at most four coordinate
# values, so 61-bit coordinates keep all arithmetic inside an int64.
SAFE_INT_BITS = 61


def random_coordinates(n: int, bound: int, rng: random.Random) -> DynnikovCoordinates:
    """Entries uniform on ``[-bound, bound]``; the zero vector is redrawn."""
    if n < 3 or bound < 1:
        raise ValueError("need n >= 3 and bound >= 1")
    k = n - 2
    while True:
        a = tuple(rng.randint(-bound, bound) for _ in range(k))
        b = tuple(rng.randint(-bound, bound) for _ in range(k))
        if any(a) or any(b):
            return DynnikovCoordinates(n, a, b)


def random_corpus(n: int, bound: int, count: int, seed: int) -> Iterator[DynnikovCoordinates]:
    """Deterministic stream of random coordinates (Mersenne Twister, ``random.Random(seed)``)."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_coordinates(n, bound, rng)


@dataclass
class BenchConfig:
    n_values: Sequence[int]
    range_values: Sequence[int]
    samples: int = 1000
    seed: int = 0
    warmup: int = 10

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if any(n < 3 for n in self.n_values):
            raise ValueError("every n must be >= 3")
        if any(r < 1 for r in self.range_values):
            raise ValueError("every range must be >= 1")


@dataclass
class BenchRow:
    n: int
    range: int
    samples: int
    mean_s: float
    median_s: float
    max_s: float
    total_moves: int
    max_int_bits: int


def cell_seed(seed: int, n: int, bound: int) -> str:
    # string seeds are hashed with SHA-512 by random.Random, so cells are
    # reproducible and independent of iteration order
    return f"{seed}/{n}/{bound}"


def bench_cell(n: int, bound: int, samples: int, seed: int, warmup: int = 10) -> BenchRow:
    rng = random.Random(cell_seed(seed, n, bound))
    corpus = [random_coordinates(n, bound, rng) for _ in range(samples)]
    for c in corpus[:warmup]:
        count_components(c)
    times = []
    moves = 0
    bits = 0
    clock = time.perf_counter
    for c in corpus:
        t0 = clock()
        _, tr = count_components(c, int_bits=SAFE_INT_BITS)
        times.append(clock() - t0)
        moves += tr.moves
        bits = max(bits, tr.max_int_bits)
    return BenchRow(
        n=n,
        range=bound,
        samples=samples,
        mean_s=statistics.fmean(times),
        median_s=statistics.median(times),
        max_s=max(times),
        total_moves=moves,
        max_int_bits=bits,
    )


def run_bench(config: BenchConfig) -> list[BenchRow]:
    return [
        bench_cell(n, r, config.samples, config.seed, config.warmup)
        for n in config.n_values
        for r in config.range_values
    ]


CSV_COLUMNS = [f.name for f in fields(BenchRow)]


def write_csv(rows: Sequence[BenchRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([r.n, r.range, r.samples, f"{r.mean_s:.9g}", f"{r.median_s:.9g}",
                    f"{r.max_s:.9g}", r.total_moves, r.max_int_bits])


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def format_table(rows: Sequence[BenchRow]) -> str:
    head = f"{'n':>5} {'range':>8} {'samples':>8} {'mean_s':>11} {'median_s':>11} {'max_s':>11} {'moves':>10} {'bits':>5}"
    lines = [head]
    for r in rows:
        lines.append(
            f"{r.n:>5} {r.range:>8} {r.samples:>8} {r.mean_s:>11.3e} {r.median_s:>11.3e} "
            f"{r.max_s:>11.3e} {r.total_moves:>10} {r.max_int_bits:>5}"
        )
    return "\n".join(lines)
