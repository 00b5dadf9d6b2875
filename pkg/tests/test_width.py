import random

import pytest

from diskplex.width import (
    MoveKind,
    Ordering,
    SurfaceComponentModel,
    SurgeryMove,
    Width,
    apply_surgery,
    available_moves,
    compare_width,
    verify_width_decrease,
    width,
)
from diskplex import corpus


def comp(e, w, in_ball=False):
    return SurfaceComponentModel(euler=e, weight=w, in_ball=in_ball)


def test_width_pairs_sorted_non_increasing():
    s = (comp(1, 4), comp(-2, 8), comp(0, 3))
    assert width(s).pairs == ((2, 8), (0, 3), (-1, 4))
    assert width(()).pairs == ((0, 0),)


def test_compare_width_lex_and_prefix():
    a = Width(((2, 8), (0, 3)))
    b = Width(((2, 8), (0, 2)))
    assert compare_width(a, b) == Ordering.GREATER
    assert compare_width(b, a) == Ordering.LESS
    assert compare_width(a, a) == Ordering.EQUAL
    # a strict prefix is smaller
    c = Width(((2, 8),))
    assert compare_width(c, a) == Ordering.LESS
    d = Width(((3, 0),))
    assert compare_width(d, a) == Ordering.GREATER


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        comp(0, -1)


def test_nonsep_compression():
    s = (comp(-2, 5),)
    out = apply_surgery(s, SurgeryMove(MoveKind.HONEST_COMPRESS_NONSEP, 0))
    assert out == (comp(0, 5),)


def test_boundary_compression():
    s = (comp(-1, 5),)
    out = apply_surgery(s, SurgeryMove(MoveKind.HONEST_BOUNDARY_COMPRESS, 0))
    assert out == (comp(0, 5),)


def test_sep_compression_splits():
    s = (comp(-2, 6),)
    mv = SurgeryMove(MoveKind.HONEST_COMPRESS_SEP, 0, split=((0, 2), (0, 4)))
    out = apply_surgery(s, mv)
    assert sorted((c.euler, c.weight) for c in out) == [(0, 2), (0, 4)]
    # euler sum must be chi + 1 or chi + 2
    with pytest.raises(ValueError):
        apply_surgery(s, SurgeryMove(MoveKind.HONEST_COMPRESS_SEP, 0, split=((1, 2), (2, 4))))
    # weights must sum to the original
    with pytest.raises(ValueError):
        apply_surgery(s, SurgeryMove(MoveKind.HONEST_COMPRESS_SEP, 0, split=((0, 1), (0, 1))))
    # each side must strictly drop -euler
    with pytest.raises(ValueError):
        apply_surgery(s, SurgeryMove(MoveKind.HONEST_COMPRESS_SEP, 0, split=((-2, 3), (2, 3))))


def test_dishonest_weight_drop_and_sphere_discard():
    s = (comp(1, 4), comp(0, 9))
    out = apply_surgery(s, SurgeryMove(MoveKind.DISHONEST, 1, k=3))
    assert out == (comp(1, 4), comp(0, 6))
    with pytest.raises(ValueError):
        apply_surgery(s, SurgeryMove(MoveKind.DISHONEST, 1, k=10))
    # the pushed-off sphere is discarded; the component itself survives
    s2 = (comp(2, 3),)
    out2 = apply_surgery(s2, SurgeryMove(MoveKind.DISHONEST, 0, k=3))
    assert out2 == (comp(2, 0),)
    assert width(out2).pairs == ((-2, 0),)


def test_compressions_require_nonpositive_euler():
    s = (comp(1, 3),)
    kinds = {m.kind for m in available_moves(s)}
    assert kinds == {MoveKind.DISHONEST}
    s2 = (comp(0, 3),)
    kinds2 = {m.kind for m in available_moves(s2)}
    assert MoveKind.HONEST_COMPRESS_NONSEP in kinds2
    assert MoveKind.HONEST_BOUNDARY_COMPRESS in kinds2


def test_every_available_move_strictly_decreases():
    rng = random.Random(99)
    for _ in range(150):
        s = corpus.random_surface(rng)
        for mv in available_moves(s):
            verdict = verify_width_decrease(s, mv)
            assert verdict.passed, (s, mv.describe(), verdict.before, verdict.after)


def test_walks_terminate():
    rng = random.Random(123)
    for _ in range(50):
        s = corpus.random_surface(rng)
        steps = 0
        while True:
            ms = available_moves(s)
            if not ms:
                break
            s = apply_surgery(s, rng.choice(ms))
            steps += 1
            assert steps < 5000
        # nothing left to cut: all components are positive-euler
        # weight-0 survivors
        assert all(c.euler > 0 and c.weight == 0 for c in s)


def test_move_target_bounds():
    s = (comp(0, 3),)
    with pytest.raises(ValueError):
        apply_surgery(s, SurgeryMove(MoveKind.DISHONEST, 5, k=1))
