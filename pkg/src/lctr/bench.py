"""Wall-clock benchmarks for the Grundy evaluators.

Shapes are generated by cell budget: staircases and rectangles are the
structured extremes (fewest and most distinct reachable positions for
their size), and random partitions sit in between.  The random
generator draws a fixed number of parts uniformly from [1, budget/parts]
and sorts them, so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Iterable, Optional

from .engine import sg_grid, sg_memo, sg_naive
from .families import rectangle_partition, staircase_partition
from .partitions import Partition

SHAPES = ("staircase", "rectangle", "random")

#: Parts drawn for a random benchmark partition.  Kept modest so the
#: dictionary evaluator's per-position key cost stays small and bench
#: runs measure evaluator scaling rather than key construction alone.
DEFAULT_RANDOM_PARTS = 32


def staircase_with_cells(target: int) -> Partition:
    """Smallest staircase with at least ``target`` boxes."""
    steps = 1
    while steps * (steps + 1) // 2 < target:
        steps += 1
    return staircase_partition(steps)


def rectangle_with_cells(target: int) -> Partition:
    """Near-square rectangle with at least ``target`` boxes."""
    side = 1
    while side * side < target:
        side += 1
    return rectangle_partition(side, side)


def random_partition(target: int, rng: random.Random, parts: int = DEFAULT_RANDOM_PARTS) -> Partition:
    """Random partition aimed at a cell budget.

    Draws ``parts`` independent uniform integers in [1, target // parts]
    and sorts them descending; the result never exceeds ``target`` boxes.
    """
    if target < 1 or parts < 1:
        raise ValueError("target and parts must be positive")
    hi = max(1, target // parts)
    drawn = sorted((rng.randint(1, hi) for _ in range(parts)), reverse=True)
    return Partition(tuple(drawn))


def make_shape(
    shape: str, target: int, rng: random.Random, parts: Optional[int] = None
) -> Partition:
    if shape == "staircase":
        return staircase_with_cells(target)
    if shape == "rectangle":
        return rectangle_with_cells(target)
    if shape == "random":
        return random_partition(target, rng, parts or DEFAULT_RANDOM_PARTS)
    raise ValueError(f"unknown shape {shape!r}")


ENGINES: dict[str, Callable[[Partition], int]] = {
    "grid": sg_grid,
    "memo": sg_memo,
    "naive": sg_naive,
}


def time_engine(engine: str, p: Partition) -> float:
    """Milliseconds for one evaluation with a cold memo table."""
    fn = ENGINES[engine]
    t0 = time.perf_counter()
    fn(p)
    return (time.perf_counter() - t0) * 1000.0


def run_bench(
    sizes: Iterable[int],
    shape: str,
    engines: Iterable[str] = ("grid", "memo"),
    seed: int = 0,
    parts: Optional[int] = None,
) -> list[dict]:
    """Serial timings; one row per (engine, size) with actual cell counts."""
    engines = list(engines)
    for engine in engines:
        if engine not in ENGINES:
            raise ValueError(f"unknown engine {engine!r}")
    rng = random.Random(seed)
    rows = []
    for target in sizes:
        p = make_shape(shape, target, rng, parts)
        for engine in engines:
            rows.append(
                {
                    "engine": engine,
                    "shape": shape,
                    "size": p.size,
                    "millis": round(time_engine(engine, p), 3),
                }
            )
    return rows
