"""Surface width bookkeeping and the strict-descent surgery laws.

A surface is a list of component models, each carrying an Euler
characteristic, a crossing weight, and an in-ball flag (components inside
a ball are the ones surgery may discard).  The width of a surface is the
multiset of per-component pairs (-euler, weight), compared by sorting
each multiset in non-increasing order and comparing lexicographically;
when one sorted sequence is a proper prefix of the other, the shorter one
is smaller.  The empty surface has width {(0, 0)}.

Surgery moves:

* HONEST_COMPRESS_NONSEP compresses along a non-separating curve: the
  target's Euler characteristic rises by 2.
* HONEST_COMPRESS_SEP compresses along a separating curve: the target
  splits into two declared components whose Euler characteristics sum to
  the original plus 2, each with strictly smaller -euler.  A boundary
  compression along a separating arc is folded into this move with the
  sum equal to the original plus 1.
* HONEST_BOUNDARY_COMPRESS compresses along a non-separating arc: the
  Euler characteristic rises by 1.
* DISHONEST is an exchange move that pushes the surface off k crossing
  points: the target's weight drops by k and the sphere split off lies in
  a ball, so it is discarded.

Every legal move strictly decreases width.

A bookkeeping caveat not modeled here: when the relevant boundary is a
torus, boundary compressions pair up (the two sides of the compressing
arc balance Euler characteristic), so the number of boundary moves in a
full cascade is even.  The width order does not need that parity and the
move validator does not enforce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence


@dataclass(frozen=True)
class SurfaceComponentModel:
    """One surface component: Euler characteristic, crossing weight, locus flag."""

    euler: int
    weight: int
    in_ball: bool = False

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError("component weight cannot be negative")

    @property
    def width_pair(self) -> tuple[int, int]:
        return (-self.euler, self.weight)


Surface = Sequence[SurfaceComponentModel]


@dataclass(frozen=True)
class Width:
    """Multiset of (-euler, weight) pairs, stored sorted non-increasing."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, surface: Surface) -> "Width":
        if not surface:
            return cls(pairs=((0, 0),))
        return cls(pairs=tuple(sorted((c.width_pair for c in surface), reverse=True)))

    def render(self) -> str:
        return "{" + ", ".join(f"({a}, {b})" for a, b in self.pairs) + "}"

    def __str__(self):
        return self.render()


def width(surface: Surface) -> Width:
    return Width.of(surface)


class Ordering(Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


def compare_width(a: Width, b: Width) -> Ordering:
    """Lexicographic comparison of the sorted pair sequences; proper
    prefixes count as smaller."""
    for pa, pb in zip(a.pairs, b.pairs):
        if pa < pb:
            return Ordering.LESS
        if pa > pb:
            return Ordering.GREATER
    if len(a.pairs) < len(b.pairs):
        return Ordering.LESS
    if len(a.pairs) > len(b.pairs):
        return Ordering.GREATER
    return Ordering.EQUAL


class MoveKind(Enum):
    HONEST_COMPRESS_NONSEP = "HONEST_COMPRESS_NONSEP"
    HONEST_COMPRESS_SEP = "HONEST_COMPRESS_SEP"
    HONEST_BOUNDARY_COMPRESS = "HONEST_BOUNDARY_COMPRESS"
    DISHONEST = "DISHONEST"


@dataclass(frozen=True)
class SurgeryMove:
    """A move applied to ``surface[target]``.

    ``split`` ((euler, weight), (euler, weight)) is required for the
    separating compression; ``k`` (points removed) for the dishonest move.
    """

    kind: MoveKind
    target: int
    split: tuple[tuple[int, int], tuple[int, int]] | None = None
    k: int | None = None

    def describe(self) -> str:
        extra = ""
        if self.kind is MoveKind.HONEST_COMPRESS_SEP:
            extra = f" split={self.split}"
        elif self.kind is MoveKind.DISHONEST:
            extra = f" k={self.k}"
        return f"{self.kind.value}@{self.target}{extra}"


def apply_surgery(surface: Surface, move: SurgeryMove) -> tuple[SurfaceComponentModel, ...]:
    """Apply one move, validating its arithmetic; returns the new surface."""
    surface = tuple(surface)
    if not (0 <= move.target < len(surface)):
        raise ValueError(f"no component {move.target} in a surface of {len(surface)}")
    comp = surface[move.target]
    rest = surface[: move.target] + surface[move.target + 1 :]

    if move.kind is MoveKind.HONEST_COMPRESS_NONSEP:
        new = (SurfaceComponentModel(comp.euler + 2, comp.weight, comp.in_ball),)
    elif move.kind is MoveKind.HONEST_BOUNDARY_COMPRESS:
        new = (SurfaceComponentModel(comp.euler + 1, comp.weight, comp.in_ball),)
    elif move.kind is MoveKind.HONEST_COMPRESS_SEP:
        if move.split is None:
            raise ValueError("separating compression needs a declared split")
        (e1, w1), (e2, w2) = move.split
        # disk compression raises total euler by 2; the folded-in
        # separating boundary compression raises it by 1
        if e1 + e2 not in (comp.euler + 1, comp.euler + 2):
            raise ValueError(
                f"invalid split arithmetic: euler {e1}+{e2} vs original {comp.euler}"
            )
        if w1 + w2 != comp.weight or w1 < 0 or w2 < 0:
            raise ValueError(f"invalid split arithmetic: weights {w1}+{w2} vs {comp.weight}")
        if not (-e1 < -comp.euler and -e2 < -comp.euler):
            raise ValueError("invalid split arithmetic: both parts need strictly smaller -euler")
        new = (
            SurfaceComponentModel(e1, w1, comp.in_ball),
            SurfaceComponentModel(e2, w2, comp.in_ball),
        )
    elif move.kind is MoveKind.DISHONEST:
        if move.k is None or move.k < 1:
            raise ValueError("dishonest move needs k >= 1")
        if move.k > comp.weight:
            raise ValueError(f"k={move.k} exceeds target weight {comp.weight}")
        # the sphere pushed off lies in a ball and is discarded
        new = (SurfaceComponentModel(comp.euler, comp.weight - move.k, comp.in_ball),)
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")

    return rest[: move.target] + new + rest[move.target :]


@dataclass(frozen=True)
class DecreaseVerdict:
    passed: bool
    before: Width
    after: Width
    move: SurgeryMove

    def render_lines(self) -> list[str]:
        return [
            f"move:   {self.move.describe()}",
            f"before: {self.before}",
            f"after:  {self.after}",
            f"verdict: {'strict decrease' if self.passed else 'NO DECREASE'}",
        ]


def verify_width_decrease(surface: Surface, move: SurgeryMove) -> DecreaseVerdict:
    """Check that the move strictly lowers the width."""
    before = width(surface)
    after = width(apply_surgery(surface, move))
    passed = compare_width(after, before) is Ordering.LESS
    return DecreaseVerdict(passed=passed, before=before, after=after, move=move)


def available_moves(surface: Surface) -> list[SurgeryMove]:
    """All structurally valid moves from a surface.

    Compressions need an essential curve or arc, so they are offered only
    for components with euler <= 0 (a sphere or disk admits none); the
    dishonest exchange needs at least one crossing point.  Split
    parameters for separating compressions are enumerated over all valid
    (euler, weight) partitions with component euler capped at 2.
    """
    moves: list[SurgeryMove] = []
    for idx, comp in enumerate(surface):
        if comp.euler <= 0:
            moves.append(SurgeryMove(MoveKind.HONEST_COMPRESS_NONSEP, idx))
            moves.append(SurgeryMove(MoveKind.HONEST_BOUNDARY_COMPRESS, idx))
            for total in (comp.euler + 2, comp.euler + 1):
                for e1 in range(comp.euler + 1, 3):
                    e2 = total - e1
                    if e2 < comp.euler + 1 or e2 > 2 or e1 > e2:
                        continue
                    for w1 in range(comp.weight + 1):
                        moves.append(
                            SurgeryMove(
                                MoveKind.HONEST_COMPRESS_SEP,
                                idx,
                                split=((e1, w1), (e2, comp.weight - w1)),
                            )
                        )
        if comp.weight >= 1:
            for k in range(1, comp.weight + 1):
                moves.append(SurgeryMove(MoveKind.DISHONEST, idx, k=k))
    return moves
