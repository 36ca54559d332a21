"""Closed-form Grundy values for recognizable partition families.

Each family evaluator takes shape parameters rather than a partition,
so ranges of shapes can be checked against the grid evaluator without
building a diagram where a formula suffices.  ``classify`` extracts the
parameters; ``closed_form_sg`` dispatches; ``verify_family_range``
compares a whole parameter grid with ``sg_grid`` and reports mismatches
as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Union

from .engine import sg_grid
from .partitions import MoveKind, Partition, run_lengths

VERIFY_SIZE_LIMIT = 10**6


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Rectangle:
    """(width^height): height equal rows of length width."""

    width: int
    height: int


@dataclass(frozen=True)
class Staircase:
    """(steps, steps-1, ..., 2, 1)."""

    steps: int


@dataclass(frozen=True)
class Gamma:
    """(arm, 1^leg): one row of length arm over a column of leg boxes; arm > 1."""

    arm: int
    leg: int


@dataclass(frozen=True)
class Diagonal:
    """(width^corner, corner^tail_rows) with width > corner."""

    width: int
    corner: int
    tail_rows: int


@dataclass(frozen=True)
class ThickGamma:
    """(width^rows, tail_width^tail_rows) with width > tail_width."""

    width: int
    rows: int
    tail_width: int
    tail_rows: int


@dataclass(frozen=True)
class Quadrated:
    """((2a)^(2b) per block): even parts, each repeated an even number of times.

    ``blocks`` holds the halved pairs (a, b) with the a strictly decreasing.
    """

    blocks: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class General:
    pass


FamilyClass = Union[
    Empty, Rectangle, Staircase, Gamma, Diagonal, ThickGamma, Quadrated, General
]

FAMILY_KINDS = (
    "rectangle",
    "staircase",
    "gamma",
    "diagonal",
    "thick-gamma",
    "quadrated",
)


def classify(p: Partition) -> FamilyClass:
    """Most specific family of a partition.

    Precedence on overlap: Empty, Rectangle, Staircase, Gamma, Diagonal,
    ThickGamma, Quadrated, General.  Overlapping families agree on the
    Grundy value, so precedence only fixes which label is reported.
    """
    parts = p.parts
    if not parts:
        return Empty()
    runs = run_lengths(parts)
    if len(runs) == 1:
        return Rectangle(width=runs[0][0], height=runs[0][1])
    if parts == tuple(range(parts[0], 0, -1)):
        return Staircase(steps=parts[0])
    if len(runs) == 2:
        (v1, c1), (v2, c2) = runs
        if c1 == 1 and v2 == 1:
            return Gamma(arm=v1, leg=c2)
        if c1 == v2:
            return Diagonal(width=v1, corner=v2, tail_rows=c2)
        return ThickGamma(width=v1, rows=c1, tail_width=v2, tail_rows=c2)
    if all(v % 2 == 0 and c % 2 == 0 for v, c in runs):
        return Quadrated(blocks=tuple((v // 2, c // 2) for v, c in runs))
    return General()


def family_partition(fam: FamilyClass) -> Partition:
    """Rebuild the partition a family value describes."""
    if isinstance(fam, Empty):
        return Partition()
    if isinstance(fam, Rectangle):
        return rectangle_partition(fam.width, fam.height)
    if isinstance(fam, Staircase):
        return staircase_partition(fam.steps)
    if isinstance(fam, Gamma):
        return gamma_partition(fam.arm, fam.leg)
    if isinstance(fam, Diagonal):
        return diagonal_partition(fam.width, fam.corner, fam.tail_rows)
    if isinstance(fam, ThickGamma):
        return thick_gamma_partition(fam.width, fam.rows, fam.tail_width, fam.tail_rows)
    if isinstance(fam, Quadrated):
        return quadrated_partition(fam.blocks)
    raise ValueError(f"no partition reconstruction for {fam!r}")


def rectangle_partition(width: int, height: int) -> Partition:
    return Partition((width,) * height)


def staircase_partition(steps: int) -> Partition:
    return Partition(tuple(range(steps, 0, -1)))


def gamma_partition(arm: int, leg: int) -> Partition:
    return Partition((arm,) + (1,) * leg)


def diagonal_partition(width: int, corner: int, tail_rows: int) -> Partition:
    return Partition((width,) * corner + (corner,) * tail_rows)


def thick_gamma_partition(width: int, rows: int, tail_width: int, tail_rows: int) -> Partition:
    return Partition((width,) * rows + (tail_width,) * tail_rows)


def quadrated_partition(blocks: tuple[tuple[int, int], ...]) -> Partition:
    parts: tuple[int, ...] = ()
    for a, b in blocks:
        parts += (2 * a,) * (2 * b)
    return Partition(parts)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def sg_rectangle(width: int, height: int) -> int:
    """Grundy value of (width^height).

    Single rows and columns alternate 1, 2 by parity of their length;
    two-row and two-column shapes alternate 2, 0; everything with both
    sides at least 3 depends only on the parity of width + height.
    Symmetric in its arguments, matching conjugation.
    """
    _require(width >= 1 and height >= 1, "rectangle sides must be positive")
    lo, hi = sorted((width, height))
    if lo == 1:
        return 1 if hi % 2 else 2
    if lo == 2:
        return 0 if hi % 2 == 0 else 2
    return 0 if (width + height) % 2 == 0 else 1


def sg_staircase(steps: int) -> int:
    """Grundy value of the staircase: 1 for odd steps, 0 for even."""
    _require(steps >= 1, "staircase needs at least one step")
    return steps % 2


def sg_gamma(arm: int, leg: int) -> int:
    """Gamma shapes are losing positions: mirroring the opponent's move wins."""
    _require(arm > 1, "gamma arm must exceed 1 (use the rectangle rule otherwise)")
    _require(leg > 0, "gamma leg must be positive")
    return 0


def sg_diagonal(width: int, corner: int, tail_rows: int) -> int:
    """(width^corner, corner^tail_rows) is always a losing position."""
    _require(width > corner >= 1, "diagonal needs width > corner >= 1")
    _require(tail_rows >= 1, "diagonal needs a nonempty tail")
    return 0


def sg_thick_gamma(width: int, rows: int, tail_width: int, tail_rows: int) -> int:
    """Grundy value of (width^rows, tail_width^tail_rows), rows > tail_width.

    Case table, with d = width - tail_width and e = rows - tail_width:

      d <= 2 or d even:   parity of tail_width + rows (even 0, odd 1)
      d odd, d > 2:       e == 1 -> 1, e == 2 -> 2,
                          e odd and e >= 3 -> 0, e even and e >= 4 -> 1

    The d-odd branch is stated in terms of e rather than rows alone; the
    table is verified wholesale against the grid evaluator by
    verify_family_range("thick-gamma"), which is part of the test gate.
    The rows == tail_width boundary belongs to the diagonal rule, and
    rows < tail_width is served by conjugating the parameters (see
    closed_form_sg).
    """
    _require(width > tail_width >= 1, "need width > tail_width >= 1")
    _require(rows > tail_width, "need rows > tail_width")
    _require(tail_rows >= 1, "need a nonempty tail")
    d = width - tail_width
    if d <= 2 or d % 2 == 0:
        return 0 if (tail_width + rows) % 2 == 0 else 1
    e = rows - tail_width
    if e == 1:
        return 1
    if e == 2:
        return 2
    return 0 if e % 2 == 1 else 1


def _check_blocks(blocks: tuple[tuple[int, int], ...]) -> None:
    _require(len(blocks) > 0, "quadrated shape needs at least one block")
    prev = None
    for a, b in blocks:
        _require(a >= 1 and b >= 1, "quadrated block parameters must be positive")
        if prev is not None:
            _require(a < prev, "quadrated half-widths must be strictly decreasing")
        prev = a


def sg_quadrated(blocks: tuple[tuple[int, int], ...]) -> int:
    """Quadrated partitions are losing: the mirror response is always available."""
    _check_blocks(blocks)
    return 0


def sg_quadrated_follower(blocks: tuple[tuple[int, int], ...], move: MoveKind) -> int:
    """Grundy value one move after a quadrated position.

    With more than one block, or a first block that is at least 4 boxes
    wide and 4 tall, both followers have value 1.  The remaining shapes
    are two-column or two-row rectangles whose followers are rectangles
    again, so the rectangle rule decides.
    """
    _check_blocks(blocks)
    a1, b1 = blocks[0]
    if a1 > 1 and (b1 > 1 or len(blocks) > 1):
        return 1
    follower = quadrated_partition(blocks).apply(move)
    shape = classify(follower)
    assert isinstance(shape, Rectangle)
    return sg_rectangle(shape.width, shape.height)


def closed_form_sg(p: Partition) -> Optional[int]:
    """Closed-form Grundy value, or None when no family formula applies.

    Tries the conjugate when the partition itself is unrecognized; the
    game is conjugate-invariant, so any family hit there is valid.
    """
    value = _family_sg(classify(p))
    if value is None and not p.is_empty:
        value = _family_sg(classify(p.conjugate()))
    return value


def _family_sg(fam: FamilyClass) -> Optional[int]:
    if isinstance(fam, Empty):
        return 0
    if isinstance(fam, Rectangle):
        return sg_rectangle(fam.width, fam.height)
    if isinstance(fam, Staircase):
        return sg_staircase(fam.steps)
    if isinstance(fam, Gamma):
        return sg_gamma(fam.arm, fam.leg)
    if isinstance(fam, Diagonal):
        return sg_diagonal(fam.width, fam.corner, fam.tail_rows)
    if isinstance(fam, ThickGamma):
        if fam.rows > fam.tail_width:
            return sg_thick_gamma(fam.width, fam.rows, fam.tail_width, fam.tail_rows)
        # rows < tail_width: evaluate the conjugate shape, which swaps
        # the roles into (rows+tail_rows)^tail_width, rows^(width-tail_width)
        return sg_thick_gamma(
            fam.rows + fam.tail_rows, fam.tail_width, fam.rows, fam.width - fam.tail_width
        )
    if isinstance(fam, Quadrated):
        return sg_quadrated(fam.blocks)
    return None


DEFAULT_VERIFY_BOUNDS: dict[str, dict[str, int]] = {
    "rectangle": {"max_width": 40, "max_height": 40},
    "staircase": {"max_steps": 40},
    "gamma": {"max_arm": 40, "max_leg": 40},
    "diagonal": {"max_width": 30, "max_tail_rows": 10},
    "thick-gamma": {"max_width": 25, "max_rows": 25, "max_tail_rows": 5},
    "quadrated": {"max_blocks": 3, "max_half_width": 8, "max_half_rows": 4},
}


def _largest_partition_size(kind: str, bounds: dict[str, int]) -> int:
    """Boxes of the biggest partition a verification sweep can build."""
    if kind == "rectangle":
        return bounds["max_width"] * bounds["max_height"]
    if kind == "staircase":
        n = bounds["max_steps"]
        return n * (n + 1) // 2
    if kind == "gamma":
        return bounds["max_arm"] + bounds["max_leg"]
    if kind == "diagonal":
        w = bounds["max_width"]
        return w * (w - 1) + (w - 1) * bounds["max_tail_rows"]
    if kind == "thick-gamma":
        w, r = bounds["max_width"], bounds["max_rows"]
        return w * r + (min(w, r) - 1) * bounds["max_tail_rows"]
    # quadrated: every block at full width and height overestimates, which
    # is safe for a limit check
    return bounds["max_blocks"] * 4 * bounds["max_half_width"] * bounds["max_half_rows"]


@dataclass
class FamilyReport:
    """Outcome of sweeping one family's parameter grid against sg_grid."""

    family: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def record(self, params: dict, expected: int, got: int) -> None:
        self.total += 1
        if expected == got:
            self.passed += 1
            return
        self.failed += 1
        if len(self.mismatches) < 20:
            self.mismatches.append({"params": params, "closed_form": expected, "grid": got})

    @property
    def ok(self) -> bool:
        return self.failed == 0


def verify_family_range(kind: str, bounds: Optional[dict[str, int]] = None) -> FamilyReport:
    """Compare one family's closed form with sg_grid over a parameter grid.

    Mismatches are returned as data (first 20 with parameters), not
    raised.  Bounds default to DEFAULT_VERIFY_BOUNDS[kind]; every test
    partition must stay at or below VERIFY_SIZE_LIMIT boxes.
    """
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    merged = dict(DEFAULT_VERIFY_BOUNDS[kind])
    if bounds:
        merged.update(bounds)
    worst = _largest_partition_size(kind, merged)
    if worst > VERIFY_SIZE_LIMIT:
        raise ValueError(
            f"bounds allow a partition of {worst} boxes, over the "
            f"{VERIFY_SIZE_LIMIT} limit"
        )
    report = FamilyReport(family=kind)
    grid_value = sg_grid

    if kind == "rectangle":
        for w in range(1, merged["max_width"] + 1):
            for h in range(1, merged["max_height"] + 1):
                report.record(
                    {"width": w, "height": h},
                    sg_rectangle(w, h),
                    grid_value(rectangle_partition(w, h)),
                )
    elif kind == "staircase":
        for steps in range(1, merged["max_steps"] + 1):
            report.record(
                {"steps": steps},
                sg_staircase(steps),
                grid_value(staircase_partition(steps)),
            )
    elif kind == "gamma":
        for arm in range(2, merged["max_arm"] + 1):
            for leg in range(1, merged["max_leg"] + 1):
                report.record(
                    {"arm": arm, "leg": leg},
                    sg_gamma(arm, leg),
                    grid_value(gamma_partition(arm, leg)),
                )
    elif kind == "diagonal":
        for width in range(2, merged["max_width"] + 1):
            for corner in range(1, width):
                for tail in range(1, merged["max_tail_rows"] + 1):
                    report.record(
                        {"width": width, "corner": corner, "tail_rows": tail},
                        sg_diagonal(width, corner, tail),
                        grid_value(diagonal_partition(width, corner, tail)),
                    )
    elif kind == "thick-gamma":
        for width in range(2, merged["max_width"] + 1):
            for rows in range(2, merged["max_rows"] + 1):
                for tail_width in range(1, min(width, rows)):
                    for tail in range(1, merged["max_tail_rows"] + 1):
                        report.record(
                            {
                                "width": width,
                                "rows": rows,
                                "tail_width": tail_width,
                                "tail_rows": tail,
                            },
                            sg_thick_gamma(width, rows, tail_width, tail),
                            grid_value(
                                thick_gamma_partition(width, rows, tail_width, tail)
                            ),
                        )
    elif kind == "quadrated":
        for k in range(1, merged["max_blocks"] + 1):
            for widths in itertools.combinations(
                range(merged["max_half_width"], 0, -1), k
            ):
                for heights in itertools.product(
                    range(1, merged["max_half_rows"] + 1), repeat=k
                ):
                    blocks = tuple(zip(widths, heights))
                    shape = quadrated_partition(blocks)
                    report.record(
                        {"blocks": blocks},
                        sg_quadrated(blocks),
                        grid_value(shape),
                    )
                    for move in MoveKind:
                        report.record(
                            {"blocks": blocks, "follower": move.value},
                            sg_quadrated_follower(blocks, move),
                            grid_value(shape.apply(move)),
                        )
    return report
