"""Deterministic instance generation and per-event latency measurement.

All randomness flows from explicit seeds, so identical seeds yield
identical instances and traces (timings naturally vary).
"""

import random
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .dynamic import Event, build
from .grid import SQUARE, GridConfig, Point


@dataclass(frozen=True)
class BenchRow:
    n: int
    events: int
    build_seconds: float
    median_us: float
    p99_us: float


def _extent(n: int, cell_size: float, points_per_cell: float) -> float:
    # side of the square region that yields roughly points_per_cell density
    return max(cell_size, cell_size * (n / points_per_cell) ** 0.5)


def random_points(n: int, seed: int, extent: float, max_weight: float = 10.0) -> list[Point]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.0, extent, n)
    ys = rng.uniform(0.0, extent, n)
    ws = rng.uniform(0.0, max_weight, n)
    return [Point(i, float(xs[i]), float(ys[i]), float(ws[i])) for i in range(n)]


def random_events(
    n_points: int,
    count: int,
    seed: int,
    extent: float,
    max_weight: float = 10.0,
) -> list[Event]:
    """A mixed insert/delete/update stream valid against a store holding
    ids 0..n_points-1; the live population stays roughly stable."""
    rng = random.Random(seed)
    live = list(range(n_points))
    next_id = n_points
    events: list[Event] = []
    for _ in range(count):
        roll = rng.random()
        if roll < 0.3 or not live:
            events.append(Event.insert(
                next_id, rng.uniform(0.0, extent), rng.uniform(0.0, extent), rng.uniform(0.0, max_weight)
            ))
            live.append(next_id)
            next_id += 1
        elif roll < 0.6:
            i = rng.randrange(len(live))
            live[i], live[-1] = live[-1], live[i]
            events.append(Event.delete(live.pop()))
        else:
            events.append(Event.update(live[rng.randrange(len(live))], rng.uniform(0.0, max_weight)))
    return events


def run_benchmark(
    sizes,
    events: int,
    seed: int,
    r_cov: float = 0.5,
    shape: str = SQUARE,
    m: int = 8,
    points_per_cell: float = 8.0,
) -> list[BenchRow]:
    """Build a random instance per size, replay random events, time each one."""
    rows = []
    for n in sizes:
        config = GridConfig(r_cov, shape, m)
        extent = _extent(n, config.cell_size, points_per_cell)
        pts = random_points(n, seed, extent)
        stream = random_events(n, events, seed + 1, extent)
        t0 = time.perf_counter()
        state = build(pts, config)
        build_seconds = time.perf_counter() - t0
        latencies_ns = []
        clock = time.perf_counter_ns
        for e in stream:
            t = clock()
            state.apply(e)
            latencies_ns.append(clock() - t)
        if latencies_ns:
            latencies_ns.sort()
            median_us = statistics.median(latencies_ns) / 1e3
            p99_us = latencies_ns[int(0.99 * (len(latencies_ns) - 1))] / 1e3
        else:
            median_us = p99_us = 0.0
        rows.append(BenchRow(n, len(stream), build_seconds, median_us, p99_us))
    return rows
