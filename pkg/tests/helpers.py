"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from typing import Iterator

from lctr.engine import best_move
from lctr.partitions import MoveKind, Partition


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as part tuples, in lexicographic-descending order."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def all_partitions_upto(limit: int) -> Iterator[tuple[int, ...]]:
    for n in range(limit + 1):
        yield from partitions_of(n)


def random_partition_upto(rng: random.Random, max_size: int) -> Partition:
    """Random nonempty partition with at most max_size boxes."""
    size = rng.randint(1, max_size)
    k = rng.randint(1, size)
    hi = max(1, size // k)
    parts = sorted((rng.randint(1, hi) for _ in range(k)), reverse=True)
    return Partition(tuple(parts))


def engine_beats_random(start: Partition, rng: random.Random) -> bool:
    """Play out a game, engine to move first; True when the engine moves last."""
    position = start
    engine_turn = True
    engine_moved_last = False
    while not position.is_empty:
        if engine_turn:
            _, position = best_move(position)
            engine_moved_last = True
        else:
            move = rng.choice((MoveKind.TOP_ROW, MoveKind.LEFT_COLUMN))
            position = position.apply(move)
            engine_moved_last = False
        engine_turn = not engine_turn
    return engine_moved_last
