"""Deterministic solvers for the tower variants.

Each solver is a small system of mutually recursive procedures. A
procedure relocates the top ``n`` disks of a stack between three post
slots (0 = from, 1 = to, 2 = spare); within a procedure the moving disks
are labeled 1 (smallest) through n (largest of the moving stack), so a
sub-call on n' disks always handles labels 1..n'.

The two workhorse relocations move a stack between permanently colored
posts in (3^n - 1)/2 moves each; they differ only in when the root disk
of the stack moves:

* ``move_busy_1and2`` - the sub-stack steps aside once before the root
  disk moves and travels twice afterwards.
* ``move_busy_2and1`` - the sub-stack travels twice before the root disk
  moves and returns once afterwards.

On top of those, ``move_down_67``/``move_up_67`` solve the free tower in
3^(n-1) + n - 1 moves (the "67" scheme, down- and up-folding variants),
``move_semifree_bnr`` relocates a stack between two oppositely colored
posts with a free post in between (the "SemiFree" scheme), and
``solve_mtoh_puzzle`` combines all of them into the "62" scheme.

Procedure bodies are plain data, interpreted three ways: as a move
generator, as an exact move counter, and as a per-disk counter. The
counters never materialize moves, so totals stay cheap for stack heights
far beyond practical trace sizes.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .core import (
    COLORED_RBB,
    Colored,
    DiskColor,
    Free,
    Move,
    PostId,
    SemiFree,
    Trace,
    Variant,
    CLASSICAL,
    FREE,
    initial_state,
    relocation_start,
    replay,
)


class Algorithm(str, Enum):
    """The counting/solving schemes; values double as CLI tokens."""

    CLASSICAL = "classical"
    C100 = "100"
    F67_DOWN = "67d"
    F67_UP = "67u"
    SEMIFREE = "sf"
    F62 = "62"


# A step is ("m", disk_label, src_slot, dst_slot) for one move, or
# ("c", procedure, child_n, slot_permutation) for a sub-call. The
# permutation maps child slots to parent slots.

Step = Tuple


def _m(label: int, src: int, dst: int) -> Step:
    return ("m", label, src, dst)


def _c(fn: str, n: int, perm: "tuple[int, int, int]") -> Step:
    return ("c", fn, n, perm)


@lru_cache(maxsize=None)
def _body(fn: str, n: int) -> "tuple[Step, ...]":
    if n <= 0:
        return ()

    if fn == "classical":
        return (
            _c("classical", n - 1, (0, 2, 1)),
            _m(n, 0, 1),
            _c("classical", n - 1, (2, 1, 0)),
        )

    if fn == "move_busy_1and2":
        return (
            _c("move_busy_1and2", n - 1, (0, 2, 1)),
            _m(n, 0, 1),
            _c("move_busy_2and1", n - 1, (2, 0, 1)),
            _c("move_busy_1and2", n - 1, (0, 1, 2)),
        )

    if fn == "move_busy_2and1":
        return (
            _c("move_busy_2and1", n - 1, (0, 1, 2)),
            _c("move_busy_1and2", n - 1, (1, 2, 0)),
            _m(n, 0, 1),
            _c("move_busy_2and1", n - 1, (2, 1, 0)),
        )

    if fn == "move_down_67_3disks":
        return (
            _c("move_busy_2and1", n - 1, (0, 2, 1)),
            _m(n, 0, 1),
            _c("move_busy_1and2", n - 2, (2, 0, 1)),
            _c("move_busy_2and1", n - 2, (0, 1, 2)),
            _m(n - 1, 2, 0),
            _c("move_busy_2and1", n - 2, (1, 2, 0)),
            _m(n - 1, 0, 1),
            _c("move_busy_1and2", n - 2, (2, 1, 0)),
        )

    if fn == "move_up_67_3disks":
        return (
            _c("move_busy_2and1", n - 2, (0, 2, 1)),
            _m(n - 1, 0, 1),
            _c("move_busy_1and2", n - 2, (2, 0, 1)),
            _m(n - 1, 1, 2),
            _c("move_busy_1and2", n - 2, (0, 1, 2)),
            _c("move_busy_2and1", n - 2, (1, 2, 0)),
            _m(n, 0, 1),
            _c("move_busy_2and1", n - 1, (2, 1, 0)),
        )

    if fn == "move_down_67":
        if n <= 2:
            return (_c("move_busy_1and2", n, (0, 1, 2)),)
        if n == 3:
            return (_c("move_down_67_3disks", 3, (0, 1, 2)),)
        return (
            _c("move_down_67", n - 1, (0, 2, 1)),
            _m(n, 0, 1),
            _c("move_busy_2and1", n - 2, (2, 0, 1)),
            _c("move_busy_1and2", n - 2, (0, 1, 2)),
            _m(n - 1, 2, 0),
            _c("move_busy_1and2", n - 2, (1, 2, 0)),
            _m(n - 1, 0, 1),
            _c("move_busy_2and1", n - 2, (2, 1, 0)),
        )

    if fn == "move_up_67":
        if n <= 2:
            return (_c("move_busy_1and2", n, (0, 1, 2)),)
        if n == 3:
            return (_c("move_up_67_3disks", 3, (0, 1, 2)),)
        return (
            _c("move_busy_1and2", n - 2, (0, 2, 1)),
            _m(n - 1, 0, 1),
            _c("move_busy_2and1", n - 2, (2, 0, 1)),
            _m(n - 1, 1, 2),
            _c("move_busy_2and1", n - 2, (0, 1, 2)),
            _c("move_busy_1and2", n - 2, (1, 2, 0)),
            _m(n, 0, 1),
            _c("move_up_67", n - 1, (2, 1, 0)),
        )

    if fn == "move_semifree_bnr":
        if n <= 2:
            return (_c("move_busy_2and1", n, (0, 1, 2)),)
        return (
            _c("move_semifree_bnr", n - 2, (0, 1, 2)),
            _m(n - 1, 0, 2),
            _c("move_busy_2and1", n - 2, (1, 0, 2)),
            _c("move_busy_1and2", n - 2, (0, 2, 1)),
            _m(n, 0, 1),
            _c("move_busy_2and1", n - 2, (2, 0, 1)),
            _c("move_busy_1and2", n - 2, (0, 1, 2)),
            _m(n - 1, 2, 0),
            _c("move_busy_1and2", n - 2, (1, 2, 0)),
            _m(n - 1, 0, 1),
            _c("move_busy_2and1", n - 2, (2, 1, 0)),
        )

    if fn == "solve_mtoh_puzzle":
        if n <= 2:
            return (_c("move_down_67", n, (0, 1, 2)),)
        return (
            _c("move_down_67", n - 1, (0, 2, 1)),
            _m(n, 0, 1),
            _c("move_all_but_n_up", n, (2, 1, 0)),
        )

    if fn == "move_all_but_n_up":
        if n <= 2:
            return ()
        return (
            _c("move_busy_2and1", n - 2, (0, 2, 1)),
            _c("move_busy_1and2", n - 2, (2, 1, 0)),
            _m(n - 1, 0, 2),
            _c("move_semifree_bnr", n - 3, (1, 2, 0)),
            _m(n - 2, 1, 0),
            _c("move_busy_2and1", n - 3, (2, 1, 0)),
            _c("move_busy_1and2", n - 3, (1, 0, 2)),
            _m(n - 1, 2, 1),
            _c("move_up_67", n - 2, (0, 1, 2)),
        )

    raise KeyError(f"unknown procedure {fn!r}")


def _expand(fn: str, n: int, posts: "tuple[PostId, PostId, PostId]") -> Iterator[Step]:
    """Yield (label, src_post, dst_post) triples for the procedure.

    Iterative with an explicit frame stack: nested generators would pay
    the full recursion depth for every yielded move.
    """
    frames: "list[list]" = [[_body(fn, n), 0, posts]]
    while frames:
        frame = frames[-1]
        steps, i, slots = frame
        if i == len(steps):
            frames.pop()
            continue
        frame[1] = i + 1
        step = steps[i]
        if step[0] == "m":
            yield (step[1], slots[step[2]], slots[step[3]])
        else:
            _, child, child_n, perm = step
            frames.append(
                [_body(child, child_n), 0,
                 (slots[perm[0]], slots[perm[1]], slots[perm[2]])]
            )


@lru_cache(maxsize=None)
def _count(fn: str, n: int) -> int:
    total = 0
    for step in _body(fn, n):
        if step[0] == "m":
            total += 1
        else:
            total += _count(step[1], step[2])
    return total


@lru_cache(maxsize=None)
def _label_counts(fn: str, n: int) -> "tuple[int, ...]":
    """Per-label move counts; index i holds moves of label i+1."""
    counts = [0] * max(n, 0)
    for step in _body(fn, n):
        if step[0] == "m":
            counts[step[1] - 1] += 1
        else:
            for i, c in enumerate(_label_counts(step[1], step[2])):
                counts[i] += c
    return tuple(counts)


_TOP_PROCEDURE = {
    Algorithm.CLASSICAL: "classical",
    Algorithm.C100: "move_busy_1and2",
    Algorithm.F67_DOWN: "move_down_67",
    Algorithm.F67_UP: "move_up_67",
    Algorithm.SEMIFREE: "move_semifree_bnr",
    Algorithm.F62: "solve_mtoh_puzzle",
}


def _procedure_for(alg: Algorithm, variant: Optional[Variant]) -> str:
    if alg is Algorithm.C100 and isinstance(variant, Colored):
        # One Red spare post means the sub-stack steps aside through the
        # destination first (the twice-then-once version).
        return (
            "move_busy_2and1"
            if variant.i is DiskColor.RED
            else "move_busy_1and2"
        )
    return _TOP_PROCEDURE[alg]


def algorithm_moves(
    alg: Algorithm, n: int, variant: Optional[Variant] = None
) -> Iterator[Move]:
    """The solver's move sequence as paper-numbered Move objects.

    Internal labels count 1 = smallest; emitted ids count 1 = largest.
    """
    if n < 1:
        raise ValueError("need at least one disk")
    fn = _procedure_for(alg, variant)
    posts = (PostId.S, PostId.D, PostId.I)
    for label, src, dst in _expand(fn, n, posts):
        yield Move(n - label + 1, src, dst)


def trace_length(alg: Algorithm, n: int) -> int:
    """Exact solver trace length, computed without materializing moves."""
    if n < 1:
        raise ValueError("need at least one disk")
    return _count(_TOP_PROCEDURE[alg], n)


def trace_disk_counts(alg: Algorithm, n: int) -> "dict[int, int]":
    """Exact per-disk move counts (paper ids), without materializing moves."""
    if n < 1:
        raise ValueError("need at least one disk")
    labels = _label_counts(_TOP_PROCEDURE[alg], n)
    return {n - i + 1: labels[i - 1] for i in range(1, n + 1)}


def default_variant(alg: Algorithm) -> Variant:
    if alg is Algorithm.CLASSICAL:
        return CLASSICAL
    if alg is Algorithm.C100:
        return COLORED_RBB
    if alg is Algorithm.SEMIFREE:
        return SemiFree(DiskColor.RED)
    return FREE


def compatible_variants(alg: Algorithm) -> "tuple[str, ...]":
    """Variant tokens each algorithm's trace replays legally under."""
    if alg is Algorithm.CLASSICAL:
        return ("classical",)
    if alg is Algorithm.C100:
        return ("colored-rbb", "colored-rrb", "free")
    if alg is Algorithm.SEMIFREE:
        return ("semifree", "semifree-blue")
    return ("free",)


def solve_classical(n: int) -> Trace:
    """Size-rule-only baseline; 2^n - 1 moves."""
    return replay(initial_state(n, CLASSICAL), algorithm_moves(Algorithm.CLASSICAL, n))


def solve_100(n: int, variant: Variant) -> Trace:
    """Solve a Colored (either coloring) or Free tower in (3^n - 1)/2 moves."""
    if isinstance(variant, Colored):
        if variant.s is not DiskColor.RED or variant.d is not DiskColor.BLUE:
            raise ValueError(
                "solving S to D needs a Red source and Blue destination"
            )
    elif not isinstance(variant, Free):
        raise ValueError("the 100 scheme runs on Colored or Free towers")
    moves = algorithm_moves(Algorithm.C100, n, variant)
    return replay(initial_state(n, variant), moves)


def solve_67_down(n: int) -> Trace:
    """Free-tower solution in 3^(n-1) + n - 1 moves, down-folding form."""
    return replay(initial_state(n, FREE), algorithm_moves(Algorithm.F67_DOWN, n))


def solve_67_up(n: int) -> Trace:
    """Time-reversed structure of the down-folding solution; same length."""
    return replay(initial_state(n, FREE), algorithm_moves(Algorithm.F67_UP, n))


def solve_semifree(n: int, s_color: DiskColor = DiskColor.RED) -> Trace:
    """Relocate n disks S to D on a SemiFree tower."""
    variant = SemiFree(s_color)
    return replay(initial_state(n, variant), algorithm_moves(Algorithm.SEMIFREE, n))


def solve_62(n: int) -> Trace:
    """The shortest of the Free-tower schemes here; length S62(n)."""
    return replay(initial_state(n, FREE), algorithm_moves(Algorithm.F62, n))


def _relocate_colored(
    fn: str, n: int, src: PostId, dst: PostId, via: PostId, via_color: DiskColor
) -> Trace:
    if n < 0:
        raise ValueError("disk count must be nonnegative")
    if len({src, dst, via}) != 3:
        raise ValueError("relocation posts must be distinct")
    colors = {src: DiskColor.RED, dst: DiskColor.BLUE, via: via_color}
    variant = Colored(colors[PostId.S], colors[PostId.I], colors[PostId.D])
    start = relocation_start(n, variant, src)
    moves = (
        Move(n - label + 1, a, b)
        for label, a, b in _expand(fn, n, (src, dst, via))
    )
    return replay(start, moves)


def relocate_colored_v1(n: int, src: PostId, dst: PostId, via: PostId) -> Trace:
    """Colored relocation, sub-stack aside once before the root disk moves.

    Posts are permanently colored Red(src)/Blue(dst)/Blue(via); emits
    (3^n - 1)/2 moves.
    """
    return _relocate_colored("move_busy_1and2", n, src, dst, via, DiskColor.BLUE)


def relocate_colored_v2(n: int, src: PostId, dst: PostId, via: PostId) -> Trace:
    """Colored relocation, sub-stack travels twice before the root disk moves.

    Posts are permanently colored Red(src)/Blue(dst)/Red(via); emits
    (3^n - 1)/2 moves.
    """
    return _relocate_colored("move_busy_2and1", n, src, dst, via, DiskColor.RED)


def solve(alg: Algorithm, n: int, variant: Optional[Variant] = None) -> Trace:
    """Dispatch to the solver for ``alg``, with its natural default variant."""
    if variant is None:
        variant = default_variant(alg)
    if alg is Algorithm.CLASSICAL:
        if not isinstance(variant, type(CLASSICAL)):
            raise ValueError("the classical scheme has no magnet variants")
        return solve_classical(n)
    if alg is Algorithm.C100:
        return solve_100(n, variant)
    if alg is Algorithm.F67_DOWN or alg is Algorithm.F67_UP or alg is Algorithm.F62:
        if not isinstance(variant, Free):
            raise ValueError(f"the {alg.value} scheme runs on a Free tower")
        if alg is Algorithm.F67_DOWN:
            return solve_67_down(n)
        if alg is Algorithm.F67_UP:
            return solve_67_up(n)
        return solve_62(n)
    if alg is Algorithm.SEMIFREE:
        if not isinstance(variant, SemiFree):
            raise ValueError("the sf scheme runs on a SemiFree tower")
        return solve_semifree(n, variant.s_color)
    raise ValueError(f"unknown algorithm {alg!r}")
