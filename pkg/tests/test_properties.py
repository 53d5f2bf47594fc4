"""Property-based tests over the rules engine and solvers."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from mtoh.core import (
    CLASSICAL,
    COLORED_RBB,
    COLORED_RRB,
    FREE,
    DiskColor,
    Move,
    PostId,
    SemiFree,
    apply,
    initial_state,
    is_legal,
    legal_moves,
    replay,
    validate_state,
)
from mtoh.solvers import Algorithm, solve

VARIANTS = [FREE, COLORED_RBB, COLORED_RRB, SemiFree(DiskColor.RED), CLASSICAL]

variants = st.sampled_from(VARIANTS)


def random_walk(n, variant, seed, steps):
    rng = random.Random(seed)
    state = initial_state(n, variant)
    for _ in range(steps):
        options = legal_moves(state)
        assert options, "a magnetic tower never deadlocks"
        state = apply(state, rng.choice(options))
        yield state


@given(variant=variants, n=st.integers(1, 6), seed=st.integers(0, 2 ** 32))
@settings(max_examples=60, deadline=None)
def test_short_walks_preserve_invariants(variant, n, seed):
    for state in random_walk(n, variant, seed, 120):
        validate_state(state)


def test_long_walks_preserve_invariants():
    # One deterministic 10^4-step walk per variant at n=6.
    for variant in VARIANTS:
        for state in random_walk(6, variant, seed=99, steps=10_000):
            validate_state(state)


@given(variant=variants, n=st.integers(1, 5), seed=st.integers(0, 2 ** 32))
@settings(max_examples=60, deadline=None)
def test_legal_moves_equal_is_legal_filter(variant, n, seed):
    state = initial_state(n, variant)
    rng = random.Random(seed)
    for _ in range(30):
        candidates = [
            Move(top.id, src, dst)
            for src in PostId
            if (top := state.top(src)) is not None
            for dst in PostId
            if dst is not src
        ]
        filtered = sorted(m for m in candidates if is_legal(state, m))
        assert legal_moves(state) == filtered
        if not filtered:
            break
        state = apply(state, rng.choice(filtered))


@given(n=st.integers(1, 5), seed=st.integers(0, 2 ** 32))
@settings(max_examples=60, deadline=None)
def test_flip_involution(n, seed):
    # A legal move followed by its legal reverse restores the state.
    state = initial_state(n, FREE)
    rng = random.Random(seed)
    for _ in range(40):
        options = legal_moves(state)
        move = rng.choice(options)
        forward = apply(state, move)
        back = move.reversed()
        if is_legal(forward, back):
            assert apply(forward, back) == state
        state = forward


@given(
    alg=st.sampled_from(list(Algorithm)),
    n=st.integers(1, 7),
)
@settings(max_examples=40, deadline=None)
def test_replay_determinism(alg, n):
    first = solve(alg, n)
    second = solve(alg, n)
    assert first.moves == second.moves
    assert first.colors == second.colors
    assert replay(first.start, first.moves).colors == first.colors


@given(n=st.integers(1, 6), seed=st.integers(0, 2 ** 32))
@settings(max_examples=40, deadline=None)
def test_monochromatic_posts_on_magnetic_walks(n, seed):
    for state in random_walk(n, FREE, seed, 80):
        for post in PostId:
            ups = {d.up for d in state.stacks[post]}
            assert len(ups) <= 1
