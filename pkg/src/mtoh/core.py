"""Rules engine for the Magnetic Tower of Hanoi.

Three posts (S, I, D) and ``n`` two-sided disks, numbered 1 (largest)
through n (smallest). Every disk has a Red face and a Blue face. A move
lifts the top disk off one post, turns it over, and lands it on another
post. Landings obey:

* Size Rule: a disk may never land on a smaller disk.
* Magnet Rule: the landing disk's bottom face may not touch a top face
  of the same color.

Because there are only two colors, the Magnet Rule forces every nonempty
post to be monochromatic: a disk can only land showing the same face-up
color as the disk below it. A post's *effective color* is the up-facing
color of its top disk (Neutral when empty), unless the post carries a
permanent color.

Tower variants:

* ``Free`` - no permanent post colors; both rules apply.
* ``Colored`` - all three posts permanently colored with either one Red
  and two Blue posts or two Red and one Blue. Landing on a permanently
  colored post requires the disk to show that color face-up after the
  flip, even when the post is empty.
* ``SemiFree`` - posts S and D permanently and oppositely colored, I
  free.
* ``Classical`` - the single-color baseline: only the Size Rule applies
  (disks still flip mechanically, but color never restricts a landing).

All values are immutable; the operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Optional, Union


class DiskColor(IntEnum):
    """Face color. Numeric values Red=1, Blue=-1 make a flip a sign change."""

    RED = 1
    BLUE = -1

    @property
    def opposite(self) -> "DiskColor":
        return DiskColor(-self.value)


class PostColor(IntEnum):
    """Effective color of a post, encoded Red=1, Neutral=0, Blue=-1."""

    RED = 1
    NEUTRAL = 0
    BLUE = -1


class PostId(IntEnum):
    S = 0
    I = 1
    D = 2


POSTS = (PostId.S, PostId.I, PostId.D)


class Rule(Enum):
    """Disk-placement rules a move can violate."""

    NOT_TOP = "not-top"
    SIZE = "size"
    MAGNET = "magnet"
    PERMANENT_COLOR = "permanent-color"


@dataclass(frozen=True, slots=True)
class Disk:
    """A disk identified by size rank (1 = largest) and its face-up color."""

    id: int
    up: DiskColor

    @property
    def down(self) -> DiskColor:
        return self.up.opposite


@dataclass(frozen=True, order=True, slots=True)
class Move:
    """One lift-flip-land action. The flip is implicit and mandatory."""

    disk: int
    src: PostId
    dst: PostId

    def __post_init__(self) -> None:
        if self.src == self.dst:
            raise ValueError("move source and destination must differ")
        if self.disk < 1:
            raise ValueError("disk ids start at 1")

    def reversed(self) -> "Move":
        return Move(self.disk, self.dst, self.src)


class IllegalMoveError(ValueError):
    """Raised when a move violates a placement rule during apply/replay."""

    def __init__(self, rule: Rule, move: Move, index: Optional[int] = None):
        self.rule = rule
        self.move = move
        self.index = index
        at = "" if index is None else f" at index {index}"
        super().__init__(f"illegal move {move}{at}: violates {rule.value} rule")


# --------------------------------------------------------------------------
# Variants


@dataclass(frozen=True)
class Classical:
    """Single-color baseline tower; Size Rule only."""


@dataclass(frozen=True)
class Free:
    """No permanent post colors."""


@dataclass(frozen=True)
class Colored:
    """All three posts permanently colored.

    The color multiset must be one Red and two Blue, or two Red and one
    Blue; three same-colored posts would make the puzzle unsolvable.
    """

    s: DiskColor
    i: DiskColor
    d: DiskColor

    def __post_init__(self) -> None:
        reds = sum(1 for c in (self.s, self.i, self.d) if c is DiskColor.RED)
        if reds not in (1, 2):
            raise ValueError(
                "colored tower needs exactly one or two Red posts, got "
                f"{reds} Red of 3"
            )

    def color_of(self, post: PostId) -> DiskColor:
        return (self.s, self.i, self.d)[post]


@dataclass(frozen=True)
class SemiFree:
    """S permanently colored, D permanently opposite, I free."""

    s_color: DiskColor = DiskColor.RED

    @property
    def d_color(self) -> DiskColor:
        return self.s_color.opposite


Variant = Union[Classical, Free, Colored, SemiFree]

CLASSICAL = Classical()
FREE = Free()
COLORED_RBB = Colored(DiskColor.RED, DiskColor.BLUE, DiskColor.BLUE)
COLORED_RRB = Colored(DiskColor.RED, DiskColor.RED, DiskColor.BLUE)
SEMIFREE_RB = SemiFree(DiskColor.RED)


def magnet_applies(variant: Variant) -> bool:
    return not isinstance(variant, Classical)


def permanent_color(variant: Variant, post: PostId) -> Optional[DiskColor]:
    """The post's permanent color, or None for a dynamically colored post."""
    if isinstance(variant, Colored):
        return variant.color_of(post)
    if isinstance(variant, SemiFree):
        if post is PostId.S:
            return variant.s_color
        if post is PostId.D:
            return variant.d_color
    return None


def start_up_color(variant: Variant) -> DiskColor:
    """Face-up color of every disk in the start stack."""
    if isinstance(variant, SemiFree):
        return variant.s_color
    return DiskColor.RED


# --------------------------------------------------------------------------
# States


@dataclass(frozen=True)
class TowerState:
    """Full configuration: disk count, variant, and the three stacks.

    Stacks are bottom-to-top tuples; on every post the ids strictly
    increase upward (Size Rule).
    """

    n: int
    variant: Variant
    stacks: "tuple[tuple[Disk, ...], tuple[Disk, ...], tuple[Disk, ...]]"

    def stack(self, post: PostId) -> "tuple[Disk, ...]":
        return self.stacks[post]

    def top(self, post: PostId) -> Optional[Disk]:
        s = self.stacks[post]
        return s[-1] if s else None


def initial_state(n: int, variant: Variant) -> TowerState:
    """All n disks on S in descending size order, start color face-up.

    The start color is Red except for a SemiFree tower whose S post is
    permanently Blue. A Colored variant must give S the Red permanent
    color so the all-Red-up start satisfies the landing rules.
    """
    if n < 1:
        raise ValueError("need at least one disk")
    if isinstance(variant, Colored) and variant.s is not DiskColor.RED:
        raise ValueError("colored start requires a Red source post")
    return relocation_start(n, variant, PostId.S)


def relocation_start(n: int, variant: Variant, src: PostId) -> TowerState:
    """n disks stacked on ``src``; face-up color matches the post's color."""
    if n < 0:
        raise ValueError("disk count must be nonnegative")
    up = permanent_color(variant, src) or start_up_color(variant)
    pile = tuple(Disk(i, up) for i in range(1, n + 1))
    stacks: list[tuple[Disk, ...]] = [(), (), ()]
    stacks[src] = pile
    return TowerState(n, variant, (stacks[0], stacks[1], stacks[2]))


def effective_color(state: TowerState, post: PostId) -> PostColor:
    """Permanent color if any, else the top disk's up color, else Neutral."""
    perm = permanent_color(state.variant, post)
    if perm is not None:
        return PostColor(perm.value)
    top = state.top(post)
    return PostColor(top.up.value) if top else PostColor.NEUTRAL


def violated_rule(state: TowerState, move: Move) -> Optional[Rule]:
    """The first placement rule the move would violate, or None if legal."""
    src_stack = state.stacks[move.src]
    if not src_stack or src_stack[-1].id != move.disk:
        return Rule.NOT_TOP
    dst_stack = state.stacks[move.dst]
    if dst_stack and dst_stack[-1].id > move.disk:
        return Rule.SIZE
    if magnet_applies(state.variant):
        disk = src_stack[-1]
        # After the flip the landing bottom face equals the current up face.
        if dst_stack and dst_stack[-1].up is disk.up:
            return Rule.MAGNET
        perm = permanent_color(state.variant, move.dst)
        if perm is not None and disk.up.opposite is not perm:
            return Rule.PERMANENT_COLOR
    return None


def is_legal(state: TowerState, move: Move) -> bool:
    return violated_rule(state, move) is None


def apply(state: TowerState, move: Move) -> TowerState:
    """Execute one move, flipping the disk; raises IllegalMoveError if illegal."""
    rule = violated_rule(state, move)
    if rule is not None:
        raise IllegalMoveError(rule, move)
    disk = state.stacks[move.src][-1]
    stacks = list(state.stacks)
    stacks[move.src] = stacks[move.src][:-1]
    stacks[move.dst] = stacks[move.dst] + (Disk(disk.id, disk.up.opposite),)
    return TowerState(state.n, state.variant, (stacks[0], stacks[1], stacks[2]))


def legal_moves(state: TowerState) -> "list[Move]":
    """All legal moves, ordered by (disk, from, to)."""
    found = []
    for src in POSTS:
        top = state.top(src)
        if top is None:
            continue
        for dst in POSTS:
            if dst is src:
                continue
            move = Move(top.id, src, dst)
            if is_legal(state, move):
                found.append(move)
    found.sort()
    return found


def is_solved(state: TowerState) -> bool:
    """All disks on D; the final orientation is not constrained."""
    return len(state.stacks[PostId.D]) == state.n


def validate_state(state: TowerState) -> None:
    """Raise ValueError if any TowerState invariant is broken.

    Checks: every id 1..n appears exactly once; ids strictly increase
    bottom to top on each post; for magnet variants every nonempty post
    is monochromatic and permanently colored posts show their color.
    """
    seen: set[int] = set()
    for post in POSTS:
        stack = state.stacks[post]
        prev = 0
        for disk in stack:
            if disk.id in seen:
                raise ValueError(f"disk {disk.id} appears twice")
            seen.add(disk.id)
            if disk.id <= prev:
                raise ValueError(f"size order broken on {post.name}")
            prev = disk.id
        if stack and magnet_applies(state.variant):
            ups = {d.up for d in stack}
            if len(ups) != 1:
                raise ValueError(f"post {post.name} is not monochromatic")
            perm = permanent_color(state.variant, post)
            if perm is not None and stack[-1].up is not perm:
                raise ValueError(
                    f"post {post.name} shows {stack[-1].up.name}, "
                    f"permanent color is {perm.name}"
                )
    if seen != set(range(1, state.n + 1)):
        raise ValueError("disk ids are not exactly 1..n")


# --------------------------------------------------------------------------
# Traces


@dataclass(frozen=True)
class Trace:
    """A validated move sequence plus the per-move post-color record.

    ``colors`` has one entry for the start state and one after each move;
    each entry is the (S, I, D) effective colors encoded 1/0/-1.
    """

    start: TowerState
    moves: "tuple[Move, ...]"
    colors: "tuple[tuple[int, int, int], ...]"
    end: TowerState

    def __len__(self) -> int:
        return len(self.moves)


def replay(start: TowerState, moves: Iterable[Move]) -> Trace:
    """Replay moves from ``start``, validating every rule along the way.

    This is the fast path used to materialize solver output: it works on
    flat lists instead of rebuilding immutable states per move, but it
    enforces exactly the rules of :func:`violated_rule`.
    """
    variant = start.variant
    magnet = magnet_applies(variant)
    perm = tuple(
        p.value if (p := permanent_color(variant, post)) is not None else None
        for post in POSTS
    )
    stacks: list[list[int]] = [[d.id for d in start.stacks[p]] for p in POSTS]
    up: list[int] = [0] * (start.n + 1)
    for post in POSTS:
        for d in start.stacks[post]:
            up[d.id] = d.up.value

    def post_color(p: int) -> int:
        if perm[p] is not None:
            return perm[p]
        return up[stacks[p][-1]] if stacks[p] else 0

    current = [post_color(0), post_color(1), post_color(2)]
    colors = [(current[0], current[1], current[2])]
    seq: list[Move] = []
    for index, mv in enumerate(moves):
        disk, s, t = mv.disk, mv.src, mv.dst
        src_stack, dst_stack = stacks[s], stacks[t]
        if not src_stack or src_stack[-1] != disk:
            raise IllegalMoveError(Rule.NOT_TOP, mv, index)
        if dst_stack and dst_stack[-1] > disk:
            raise IllegalMoveError(Rule.SIZE, mv, index)
        new_up = -up[disk]
        if magnet:
            if dst_stack and up[dst_stack[-1]] == up[disk]:
                raise IllegalMoveError(Rule.MAGNET, mv, index)
            if perm[t] is not None and new_up != perm[t]:
                raise IllegalMoveError(Rule.PERMANENT_COLOR, mv, index)
        src_stack.pop()
        up[disk] = new_up
        dst_stack.append(disk)
        if perm[s] is None:
            current[s] = up[src_stack[-1]] if src_stack else 0
        if perm[t] is None:
            current[t] = new_up
        seq.append(mv)
        colors.append((current[0], current[1], current[2]))

    end_stacks = tuple(
        tuple(Disk(i, DiskColor(up[i])) for i in stacks[p]) for p in POSTS
    )
    end = TowerState(start.n, variant, end_stacks)  # type: ignore[arg-type]
    return Trace(start, tuple(seq), tuple(colors), end)


def per_disk_counts(trace: Trace) -> "dict[int, int]":
    """Moves made by each disk id; includes zero entries, sums to len(trace)."""
    counts = {i: 0 for i in range(1, trace.start.n + 1)}
    for mv in trace.moves:
        counts[mv.disk] += 1
    return counts


def walk_states(trace: Trace) -> Iterator[TowerState]:
    """Yield every state along the trace, start first (len(moves)+1 states)."""
    state = trace.start
    yield state
    for mv in trace.moves:
        state = apply(state, mv)
        yield state


# --------------------------------------------------------------------------
# Serialization
#
# Line-delimited trace format (documented in the README):
#   header:  n=<int> variant=<token> start=<S|I|D>
#   moves:   <index>,<disk>,<from>,<to>,<colorS>,<colorI>,<colorD>
# with 1-based move indexes and colors recorded after the move.

_COLOR_LETTER = {DiskColor.RED: "r", DiskColor.BLUE: "b"}
_LETTER_COLOR = {"r": DiskColor.RED, "b": DiskColor.BLUE}


def variant_token(variant: Variant) -> str:
    if isinstance(variant, Classical):
        return "classical"
    if isinstance(variant, Free):
        return "free"
    if isinstance(variant, Colored):
        return "colored-" + "".join(
            _COLOR_LETTER[c] for c in (variant.s, variant.i, variant.d)
        )
    if isinstance(variant, SemiFree):
        return "semifree" if variant.s_color is DiskColor.RED else "semifree-blue"
    raise TypeError(f"unknown variant {variant!r}")


def parse_variant(token: str) -> Variant:
    token = token.strip().lower()
    if token == "classical":
        return CLASSICAL
    if token == "free":
        return FREE
    if token in ("semifree", "semifree-red"):
        return SemiFree(DiskColor.RED)
    if token == "semifree-blue":
        return SemiFree(DiskColor.BLUE)
    if token.startswith("colored-"):
        letters = token[len("colored-"):]
        if len(letters) == 3 and all(ch in _LETTER_COLOR for ch in letters):
            s, i, d = (_LETTER_COLOR[ch] for ch in letters)
            return Colored(s, i, d)
    raise ValueError(f"unknown variant token {token!r}")


def trace_to_lines(trace: Trace) -> "list[str]":
    start_post = PostId.S
    for post in POSTS:
        if trace.start.stacks[post]:
            start_post = post
            break
    lines = [
        f"n={trace.start.n} variant={variant_token(trace.start.variant)} "
        f"start={start_post.name}"
    ]
    for i, (mv, cols) in enumerate(zip(trace.moves, trace.colors[1:]), start=1):
        lines.append(
            f"{i},{mv.disk},{mv.src.name},{mv.dst.name},"
            f"{cols[0]},{cols[1]},{cols[2]}"
        )
    return lines


def trace_from_lines(lines: Iterable[str]) -> Trace:
    """Parse and re-validate a serialized trace; color fields are checked."""
    it = iter(lines)
    try:
        header = next(it).strip()
    except StopIteration:
        raise ValueError("empty trace input") from None
    fields = dict(part.split("=", 1) for part in header.split())
    n = int(fields["n"])
    variant = parse_variant(fields["variant"])
    start_post = PostId[fields.get("start", "S")]
    start = relocation_start(n, variant, start_post)

    moves = []
    recorded = []
    for line in it:
        line = line.strip()
        if not line:
            continue
        idx, disk, src, dst, c0, c1, c2 = line.split(",")
        moves.append(Move(int(disk), PostId[src], PostId[dst]))
        recorded.append((int(c0), int(c1), int(c2)))
    trace = replay(start, moves)
    if list(trace.colors[1:]) != recorded:
        raise ValueError("recorded post colors do not match replay")
    return trace
