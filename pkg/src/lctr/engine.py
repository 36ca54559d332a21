"""Sprague-Grundy evaluation and optimal play for LCTR.

Three evaluators share one contract (they agree everywhere):

* ``sg_naive``  plain recursion over the game tree, exponential in the
  number of plays; kept as the independent oracle and size-guarded.
* ``sg_memo``   dictionary-memoized recursion; every distinct reachable
  position is computed exactly once.  Keys are run-length encodings.
* ``sg_grid``   linear-time sweep over the boxes of the Young diagram;
  the production evaluator (O(size) time, two row buffers of memory).

The box at row ``j``, column ``i`` of the diagram stands for the
position reached after ``i`` column moves and ``j`` row moves, and its
value is the mex of the value to its right (the column-move follower)
and the value below it (the row-move follower), each read as 0 when the
neighbor box does not exist.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

from .partitions import MoveKind, Partition, PartitionDomainError, run_lengths

#: Grundy values are plain ints; in LCTR they never exceed 2.
GrundyValue = int

NAIVE_SIZE_LIMIT = 30


class Outcome(Enum):
    """Who wins under optimal play from here."""

    NEXT_PLAYER_WINS = "N"
    PREVIOUS_PLAYER_WINS = "P"


def mex(values: Iterable[int]) -> int:
    """Least natural number missing from ``values``."""
    present = set(values)
    v = 0
    while v in present:
        v += 1
    return v


def _mex2(a: int, b: int) -> int:
    # mex of a two-element multiset drawn from {0, 1, 2}
    if a and b:
        return 0
    if a != 1 and b != 1:
        return 1
    return 2


def sg_naive(p: Partition) -> GrundyValue:
    """Grundy value by unmemoized recursion; the brute-force oracle.

    Visits one node per play, which grows exponentially, so inputs are
    capped at NAIVE_SIZE_LIMIT boxes.
    """
    if p.size > NAIVE_SIZE_LIMIT:
        raise ValueError(
            f"sg_naive is an oracle for partitions of at most {NAIVE_SIZE_LIMIT} boxes"
        )

    def go(parts: tuple[int, ...]) -> int:
        if not parts:
            return 0
        after_row = go(parts[1:])
        after_col = go(tuple(x - 1 for x in parts if x > 1))
        return mex((after_row, after_col))

    return go(p.parts)


class MemoTable(dict):
    """Map from run-length partition encodings to Grundy values.

    Always contains the terminal entry (empty partition -> 0); its
    length therefore counts the distinct positions evaluated so far,
    terminal included.
    """

    def __init__(self) -> None:
        super().__init__()
        self[()] = 0


def _runs_after_top_row(runs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    value, count = runs[0]
    if count > 1:
        return ((value, count - 1),) + runs[1:]
    return runs[1:]


def _runs_after_left_column(runs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    # run values are strictly decreasing, so decrementing keeps them
    # distinct; only a trailing run of 1s can vanish
    return tuple((value - 1, count) for value, count in runs if value > 1)


def sg_memo(p: Partition, table: Optional[MemoTable] = None) -> GrundyValue:
    """Grundy value by memoized recursion over follower positions.

    Uses an explicit stack so deep positions (long first rows or
    columns) do not hit the interpreter recursion limit.  Passing a
    table reuses previously computed values across calls.
    """
    if table is None:
        table = MemoTable()
    root = run_lengths(p.parts)
    stack = [root]
    while stack:
        runs = stack[-1]
        if runs in table:
            stack.pop()
            continue
        after_row = _runs_after_top_row(runs)
        after_col = _runs_after_left_column(runs)
        row_value = table.get(after_row)
        col_value = table.get(after_col)
        if row_value is not None and col_value is not None:
            table[runs] = _mex2(row_value, col_value)
            stack.pop()
        else:
            if row_value is None:
                stack.append(after_row)
            if col_value is None:
                stack.append(after_col)
    return table[root]


def sg_grid(p: Partition) -> GrundyValue:
    """Grundy value by the linear diagram sweep.

    Rows are processed bottom to top, each right to left.  Only the row
    below is retained, so memory is O(width).  Boxes with no box below
    them see a 0 from that side, which makes their values alternate
    1, 2, 1, 2, ... from the right edge; that stretch is filled without
    consulting the (absent) row below.
    """
    parts = p.parts
    below: list[int] = []
    below_len = 0
    for j in range(len(parts) - 1, -1, -1):
        width = parts[j]
        cur = [0] * width
        value = 0
        i = width - 1
        while i >= below_len:
            value = 1 if value != 1 else 2
            cur[i] = value
            i -= 1
        while i >= 0:
            b = below[i]
            if value and b:
                value = 0
            elif value != 1 and b != 1:
                value = 1
            else:
                value = 2
            cur[i] = value
            i -= 1
        below = cur
        below_len = width
    return below[0] if below else 0


def sg_grid_table(p: Partition) -> list[list[int]]:
    """Full per-box value table of the diagram sweep.

    Row ``j``, column ``i`` holds the Grundy value of
    ``p.subdiagram(i, j)``; total entries equal ``p.size``.  Useful for
    inspection and tests; ``sg_grid`` is the memory-lean variant.
    """
    parts = p.parts
    table: list[list[int]] = [[] for _ in parts]
    below: list[int] = []
    below_len = 0
    for j in range(len(parts) - 1, -1, -1):
        width = parts[j]
        cur = [0] * width
        value = 0
        for i in range(width - 1, -1, -1):
            b = below[i] if i < below_len else 0
            value = _mex2(value, b)
            cur[i] = value
        table[j] = cur
        below = cur
        below_len = width
    return table


def outcome(p: Partition) -> Outcome:
    """Winner classification: previous player wins exactly at value 0."""
    if sg_grid(p) == 0:
        return Outcome.PREVIOUS_PLAYER_WINS
    return Outcome.NEXT_PLAYER_WINS


def follower_values(p: Partition) -> dict[MoveKind, tuple[Partition, GrundyValue]]:
    """Both followers of a nonempty position with their Grundy values."""
    if p.is_empty:
        raise PartitionDomainError("the empty partition has no followers")
    after_col = p.remove_left_column()
    after_row = p.remove_top_row()
    return {
        MoveKind.LEFT_COLUMN: (after_col, sg_grid(after_col)),
        MoveKind.TOP_ROW: (after_row, sg_grid(after_row)),
    }


def best_move(p: Partition) -> tuple[MoveKind, Partition]:
    """Optimal move from a nonempty position.

    From a winning position, returns a move to a value-0 follower (one
    always exists).  From a losing position every move loses, so the
    deterministic fallback is the top-row move.  Ties prefer the top
    row as well, keeping engine behavior reproducible.
    """
    if p.is_empty:
        raise PartitionDomainError("no move from the empty partition")
    after_row = p.remove_top_row()
    if sg_grid(after_row) == 0:
        return (MoveKind.TOP_ROW, after_row)
    after_col = p.remove_left_column()
    if sg_grid(after_col) == 0:
        return (MoveKind.LEFT_COLUMN, after_col)
    return (MoveKind.TOP_ROW, after_row)


def reachable_positions(p: Partition) -> set[Partition]:
    """Every position reachable by one or more moves.

    Excludes the start, includes the empty partition whenever the start
    is nonempty.  The set has at most ``p.size`` elements, with equality
    exactly for rectangles.
    """
    start = p.parts
    visited = {start}
    frontier = [start]
    while frontier:
        parts = frontier.pop()
        if not parts:
            continue
        for child in (parts[1:], tuple(x - 1 for x in parts if x > 1)):
            if child not in visited:
                visited.add(child)
                frontier.append(child)
    visited.discard(start)
    return {Partition(parts) for parts in visited}


def count_plays(p: Partition) -> int:
    """Number of distinct labeled move sequences from ``p`` to the end.

    Column and row moves count as different plays even when they lead
    to the same position, so ``plays = plays(L) + plays(T)`` with
    ``plays(empty) = 1``.  Exact big-integer arithmetic.
    """
    counts: dict[tuple[tuple[int, int], ...], int] = {(): 1}
    root = run_lengths(p.parts)
    stack = [root]
    while stack:
        runs = stack[-1]
        if runs in counts:
            stack.pop()
            continue
        after_row = _runs_after_top_row(runs)
        after_col = _runs_after_left_column(runs)
        row_count = counts.get(after_row)
        col_count = counts.get(after_col)
        if row_count is not None and col_count is not None:
            counts[runs] = row_count + col_count
            stack.pop()
        else:
            if row_count is None:
                stack.append(after_row)
            if col_count is None:
                stack.append(after_col)
    return counts[root]
