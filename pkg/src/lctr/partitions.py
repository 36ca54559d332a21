"""Integer partitions and the two LCTR moves.

A partition is stored as its weakly decreasing tuple of positive parts.
The Young diagram of ``(p1, ..., pk)`` is a left-justified array with
``pi`` boxes in row ``i``.  A move in LCTR deletes either the whole left
column or the whole top row of that diagram; the empty partition is the
only terminal position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

# Expanding "v^e" text beyond this many parts is almost certainly a typo
# or an attack on the service; refuse rather than allocate.
MAX_PARSED_PARTS = 10_000_000


class PartitionSyntaxError(ValueError):
    """Partition text that cannot be tokenized."""


class PartitionDomainError(ValueError):
    """Structurally invalid partition data, or an illegal move."""


class MoveKind(Enum):
    """The two legal moves of LCTR."""

    LEFT_COLUMN = "L"
    TOP_ROW = "T"

    @classmethod
    def from_token(cls, token: str) -> "MoveKind":
        """Map a wire token ("L" or "T") to a move."""
        for kind in cls:
            if token == kind.value:
                return kind
        raise PartitionDomainError(f"unknown move token {token!r}")


@dataclass(frozen=True)
class Partition:
    """An integer partition, i.e. a game position.

    ``parts`` must be weakly decreasing positive integers; the empty
    tuple is the empty partition.  Instances are immutable and hashable,
    so they can be used as dictionary keys and shared across threads.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise PartitionDomainError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise PartitionDomainError(
                    f"parts must be weakly decreasing, got {p} after {prev}"
                )
            prev = p

    @property
    def size(self) -> int:
        """Number of boxes of the Young diagram."""
        return sum(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def width(self) -> int:
        """Length of the top row (0 for the empty partition)."""
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        """Number of parts (rows)."""
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self, "exponent")

    def remove_top_row(self) -> "Partition":
        """Drop the first part."""
        if not self.parts:
            raise PartitionDomainError("no move from the empty partition")
        return Partition(self.parts[1:])

    def remove_left_column(self) -> "Partition":
        """Decrement every part, discarding parts that reach zero."""
        if not self.parts:
            raise PartitionDomainError("no move from the empty partition")
        return Partition(tuple(p - 1 for p in self.parts if p > 1))

    def apply(self, move: MoveKind) -> "Partition":
        if move is MoveKind.TOP_ROW:
            return self.remove_top_row()
        return self.remove_left_column()

    def conjugate(self) -> "Partition":
        """Exchange rows and columns of the Young diagram.

        Column ``j`` of the diagram has one box per part that is at
        least ``j``, so the conjugate parts are suffix counts of a part
        histogram; this runs in O(rows + width).
        """
        parts = self.parts
        if not parts:
            return Partition()
        counts = [0] * (parts[0] + 1)
        for p in parts:
            counts[p] += 1
        conj = []
        running = 0
        for j in range(parts[0], 0, -1):
            running += counts[j]
            conj.append(running)
        conj.reverse()
        return Partition(tuple(conj))

    def subdiagram(self, cols_removed: int, rows_removed: int) -> "Partition":
        """Position after removing the left column ``cols_removed`` times
        and the top row ``rows_removed`` times, in any interleaving.

        Over-removal saturates to the empty partition.
        """
        if cols_removed < 0 or rows_removed < 0:
            raise PartitionDomainError("removal counts must be nonnegative")
        return Partition(
            tuple(p - cols_removed for p in self.parts[rows_removed:] if p > cols_removed)
        )


_ITEM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse partition text such as ``"5,3^2,2,1^2"`` or ``"()"``.

    Items are ``value`` or ``value^count``, comma separated, with
    optional surrounding parentheses and whitespace.  The empty string
    and ``"()"`` denote the empty partition.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        return Partition()
    parts: list[int] = []
    for raw in body.split(","):
        token = raw.strip()
        match = _ITEM_RE.match(token)
        if not match:
            raise PartitionSyntaxError(f"bad partition item {token!r}")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) else 1
        if value < 1:
            raise PartitionDomainError(f"part must be at least 1, got {value}")
        if count < 1:
            raise PartitionDomainError(f"repeat count must be at least 1, got {count}")
        if len(parts) + count > MAX_PARSED_PARTS:
            raise PartitionDomainError(
                f"partition text expands to more than {MAX_PARSED_PARTS} parts"
            )
        parts.extend([value] * count)
    return Partition(tuple(parts))


def format_partition(p: Partition, style: str = "exponent") -> str:
    """Render a partition as text; round-trips through parse_partition.

    ``exponent`` collapses runs of equal parts into ``value^count``;
    ``expanded`` lists every part.  The empty partition is ``"()"``.
    """
    if style not in ("exponent", "expanded"):
        raise ValueError(f"unknown style {style!r}")
    if p.is_empty:
        return "()"
    if style == "expanded":
        return ",".join(str(part) for part in p.parts)
    items = []
    for value, count in run_lengths(p.parts):
        items.append(str(value) if count == 1 else f"{value}^{count}")
    return ",".join(items)


def run_lengths(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Run-length encode a part tuple as ((value, count), ...)."""
    runs: list[tuple[int, int]] = []
    for p in parts:
        if runs and runs[-1][0] == p:
            runs[-1] = (p, runs[-1][1] + 1)
        else:
            runs.append((p, 1))
    return tuple(runs)
