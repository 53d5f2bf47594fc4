"""Magnetic Tower of Hanoi: rules engine, solvers, exact counts and reports."""

from .core import (
    CLASSICAL,
    COLORED_RBB,
    COLORED_RRB,
    FREE,
    SEMIFREE_RB,
    Classical,
    Colored,
    Disk,
    DiskColor,
    Free,
    IllegalMoveError,
    Move,
    PostColor,
    PostId,
    Rule,
    SemiFree,
    TowerState,
    Trace,
    Variant,
    apply,
    effective_color,
    initial_state,
    is_legal,
    is_solved,
    legal_moves,
    parse_variant,
    per_disk_counts,
    replay,
    trace_from_lines,
    trace_to_lines,
    validate_state,
    variant_token,
)
from .counts import (
    DoomsdayReport,
    doomsday_report,
    duration_ratio,
    limit_ratio,
    per_disk,
    per_disk_by_recurrence,
    significant_digits,
    total,
    total_by_recurrence,
    total_by_scaling_recurrence,
)
from .solvers import (
    Algorithm,
    algorithm_moves,
    relocate_colored_v1,
    relocate_colored_v2,
    solve,
    solve_100,
    solve_62,
    solve_67_down,
    solve_67_up,
    solve_classical,
    solve_semifree,
    trace_disk_counts,
    trace_length,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
