"""LCTR: Grundy values, optimal play and verification for the
left-column/top-row game on integer partitions."""

from .engine import (
    GrundyValue,
    MemoTable,
    Outcome,
    best_move,
    count_plays,
    follower_values,
    mex,
    outcome,
    reachable_positions,
    sg_grid,
    sg_grid_table,
    sg_memo,
    sg_naive,
)
from .families import (
    FamilyReport,
    classify,
    closed_form_sg,
    verify_family_range,
)
from .partitions import (
    MoveKind,
    Partition,
    PartitionDomainError,
    PartitionSyntaxError,
    format_partition,
    parse_partition,
)

__version__ = "0.1.0"

__all__ = [
    "GrundyValue",
    "MemoTable",
    "MoveKind",
    "Outcome",
    "Partition",
    "PartitionDomainError",
    "PartitionSyntaxError",
    "FamilyReport",
    "best_move",
    "classify",
    "closed_form_sg",
    "count_plays",
    "follower_values",
    "format_partition",
    "mex",
    "outcome",
    "parse_partition",
    "reachable_positions",
    "sg_grid",
    "sg_grid_table",
    "sg_memo",
    "sg_naive",
    "verify_family_range",
]
