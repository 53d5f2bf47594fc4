"""Brute-force ground truth: reachable-state enumeration and shortest solves.

States are packed into one base-6 integer, one digit per disk id:
``digit = 2 * post + (0 if Red-up else 1)``. For a fixed disk-to-post
assignment the stacking order on each post is forced by the Size Rule,
so the packing is bijective with valid configurations.

The search is level-synchronous breadth-first. Each level's frontier is
split into contiguous chunks (one per worker), chunks are expanded
independently, and discoveries are merged back in chunk order, so the
result is identical for any worker count. Neighbor generation follows
the canonical (disk, from, to) move order, which makes the recovered
optimal trace the lexicographically least one.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    Disk,
    DiskColor,
    Move,
    PostId,
    TowerState,
    Trace,
    Variant,
    initial_state,
    magnet_applies,
    permanent_color,
    replay,
)

BFS_MAX_N = 8
ENUMERATE_MAX_N = 10


class OracleBudgetError(ValueError):
    """Raised when an instance exceeds the search budget."""


@dataclass(frozen=True)
class OracleResult:
    n: int
    variant: Variant
    optimal_length: int
    trace: Trace
    states_explored: int


def pack_state(state: TowerState) -> int:
    key = 0
    for post in PostId:
        for disk in state.stacks[post]:
            digit = 2 * post + (0 if disk.up is DiskColor.RED else 1)
            key += digit * 6 ** (disk.id - 1)
    return key


def unpack_state(key: int, n: int, variant: Variant) -> TowerState:
    piles: "list[list[Disk]]" = [[], [], []]
    for disk_id in range(1, n + 1):
        key, digit = divmod(key, 6)
        post, blue = divmod(digit, 2)
        piles[post].append(
            Disk(disk_id, DiskColor.BLUE if blue else DiskColor.RED)
        )
    stacks = tuple(tuple(p) for p in piles)
    return TowerState(n, variant, stacks)  # type: ignore[arg-type]


class _Space:
    """Expansion rules over packed keys for one (n, variant) search space."""

    def __init__(self, n: int, variant: Variant):
        self.n = n
        self.variant = variant
        self.magnet = magnet_applies(variant)
        self.perm = tuple(
            c.value if (c := permanent_color(variant, post)) is not None else None
            for post in PostId
        )
        self.pow6 = [6 ** i for i in range(n)]

    def decode(self, key: int) -> "tuple[list[list[int]], list[int]]":
        """Stacks of ids (bottom to top) and per-id up colors (+1/-1)."""
        stacks: "list[list[int]]" = [[], [], []]
        up = [0] * (self.n + 1)
        for disk_id in range(1, self.n + 1):
            key, digit = divmod(key, 6)
            post, blue = divmod(digit, 2)
            stacks[post].append(disk_id)
            up[disk_id] = -1 if blue else 1
        return stacks, up

    def neighbors(self, key: int) -> "list[tuple[Move, int]]":
        """Legal successor states in canonical (disk, from, to) move order."""
        stacks, up = self.decode(key)
        tops = [s[-1] if s else 0 for s in stacks]
        out = []
        for src in (0, 1, 2):
            disk = tops[src]
            if not disk:
                continue
            for dst in (0, 1, 2):
                if dst == src:
                    continue
                resident = tops[dst]
                if resident and resident > disk:
                    continue
                if self.magnet:
                    if resident and up[resident] == up[disk]:
                        continue
                    if self.perm[dst] is not None and -up[disk] != self.perm[dst]:
                        continue
                old_digit = 2 * src + (0 if up[disk] == 1 else 1)
                new_digit = 2 * dst + (0 if -up[disk] == 1 else 1)
                child = key + (new_digit - old_digit) * self.pow6[disk - 1]
                out.append((Move(disk, PostId(src), PostId(dst)), child))
        out.sort(key=lambda mc: (mc[0].disk, mc[0].src, mc[0].dst))
        return out

    def is_goal(self, key: int, all_blue: bool) -> bool:
        for _ in range(self.n):
            key, digit = divmod(key, 6)
            if all_blue:
                if digit != 5:
                    return False
            elif digit < 4:
                return False
        return True


def _split(items: "list[int]", parts: int) -> "list[list[int]]":
    if parts <= 1 or len(items) <= 1:
        return [items]
    size = (len(items) + parts - 1) // parts
    return [items[i : i + size] for i in range(0, len(items), size)]


def _search(
    n: int,
    variant: Variant,
    workers: int,
    goal_all_blue: Optional[bool],
) -> "tuple[dict[int, Optional[tuple[int, Move]]], Optional[int], int]":
    """BFS from the start key.

    Returns (parents, first goal key or None, start key). With
    ``goal_all_blue`` None the whole reachable space is explored.
    """
    space = _Space(n, variant)
    start = pack_state(initial_state(n, variant))
    parents: "dict[int, Optional[tuple[int, Move]]]" = {start: None}
    frontier = [start]
    if goal_all_blue is not None and space.is_goal(start, goal_all_blue):
        return parents, start, start

    def expand(chunk: "list[int]") -> "list[tuple[int, int, Move]]":
        found = []
        for key in chunk:
            for move, child in space.neighbors(key):
                if child not in parents:
                    found.append((child, key, move))
        return found

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            chunks = _split(frontier, workers)
            results = (
                list(pool.map(expand, chunks)) if pool else [expand(c) for c in chunks]
            )
            goal_hit: Optional[int] = None
            next_frontier = []
            for batch in results:
                for child, parent, move in batch:
                    if child in parents:
                        continue
                    parents[child] = (parent, move)
                    next_frontier.append(child)
                    if (
                        goal_hit is None
                        and goal_all_blue is not None
                        and space.is_goal(child, goal_all_blue)
                    ):
                        goal_hit = child
            if goal_hit is not None:
                return parents, goal_hit, start
            frontier = next_frontier
    finally:
        if pool:
            pool.shutdown()
    return parents, None, start


def enumerate_states(n: int, variant: Variant) -> int:
    """Count of states reachable from the start by legal moves."""
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise OracleBudgetError(f"state enumeration is budgeted for n <= {ENUMERATE_MAX_N}")
    parents, _, _ = _search(n, variant, workers=1, goal_all_blue=None)
    return len(parents)


def bfs_optimal(
    n: int,
    variant: Variant,
    workers: int = 1,
    all_blue_goal: bool = False,
) -> OracleResult:
    """True shortest solution (all disks on D; orientation free by default)."""
    if not 1 <= n <= BFS_MAX_N:
        raise OracleBudgetError(f"shortest-path search is budgeted for n <= {BFS_MAX_N}")
    if workers < 1:
        raise ValueError("need at least one worker")
    parents, goal, start = _search(n, variant, workers, all_blue_goal)
    if goal is None:
        raise ValueError(f"no solution reachable for n={n}, {variant!r}")
    moves: "list[Move]" = []
    key = goal
    while key != start:
        parent, move = parents[key]  # type: ignore[misc]
        moves.append(move)
        key = parent
    moves.reverse()
    trace = replay(initial_state(n, variant), moves)
    return OracleResult(n, variant, len(moves), trace, len(parents))


def all_optimal_traces(n: int, variant: Variant) -> "list[tuple[Move, ...]]":
    """Every optimal move sequence, lexicographically ordered. Tiny n only."""
    if not 1 <= n <= 4:
        raise OracleBudgetError("exhaustive optimal-path enumeration is for n <= 4")
    space = _Space(n, variant)
    start = pack_state(initial_state(n, variant))
    # Full BFS level map.
    dist = {start: 0}
    frontier = [start]
    level = 0
    goal_level: Optional[int] = None
    while frontier and goal_level is None:
        level += 1
        nxt = []
        for key in frontier:
            for _, child in space.neighbors(key):
                if child not in dist:
                    dist[child] = level
                    nxt.append(child)
                    if goal_level is None and space.is_goal(child, False):
                        goal_level = level
        frontier = nxt
    if goal_level is None:
        raise ValueError("no solution reachable")

    solutions: "list[tuple[Move, ...]]" = []

    def extend(key: int, path: "list[Move]") -> None:
        d = len(path)
        if d == goal_level:
            if space.is_goal(key, False):
                solutions.append(tuple(path))
            return
        for move, child in space.neighbors(key):
            if dist.get(child) == d + 1:
                path.append(move)
                extend(child, path)
                path.pop()

    extend(start, [])
    return solutions


# --------------------------------------------------------------------------
# Report


@dataclass(frozen=True)
class OptimalityRow:
    n: int
    lengths: "dict[str, int]"
    free_optimum: int
    colored_optimum: int
    semifree_optimum: int
    gaps: "dict[str, int]"
    states_free: int


def optimality_report(n_max: int, workers: int = 1) -> "list[OptimalityRow]":
    """Solver lengths against true optima for n = 1..n_max."""
    from . import counts  # local import to avoid a cycle at module load
    from .core import COLORED_RBB, FREE, SemiFree
    from .solvers import Algorithm

    if not 1 <= n_max <= BFS_MAX_N:
        raise OracleBudgetError(f"optimality report is budgeted for n <= {BFS_MAX_N}")
    rows = []
    for n in range(1, n_max + 1):
        free = bfs_optimal(n, FREE, workers=workers)
        colored = bfs_optimal(n, COLORED_RBB, workers=workers)
        semifree = bfs_optimal(n, SemiFree(DiskColor.RED), workers=workers)
        lengths = {
            "100": counts.total(Algorithm.C100, n),
            "67d": counts.total(Algorithm.F67_DOWN, n),
            "67u": counts.total(Algorithm.F67_UP, n),
            "62": counts.total(Algorithm.F62, n),
            "sf": counts.total(Algorithm.SEMIFREE, n),
        }
        gaps = {
            "100": lengths["100"] - colored.optimal_length,
            "67d": lengths["67d"] - free.optimal_length,
            "67u": lengths["67u"] - free.optimal_length,
            "62": lengths["62"] - free.optimal_length,
            "sf": lengths["sf"] - semifree.optimal_length,
        }
        rows.append(
            OptimalityRow(
                n=n,
                lengths=lengths,
                free_optimum=free.optimal_length,
                colored_optimum=colored.optimal_length,
                semifree_optimum=semifree.optimal_length,
                gaps=gaps,
                states_free=free.states_explored,
            )
        )
    return rows
