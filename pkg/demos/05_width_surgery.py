"""
Width orders and surgery descent
================================

A surface is summarized per component by the pair (-euler, weight),
collected into a non-increasing sequence and compared lexicographically
with the strict-prefix rule.  Every surgery move strictly lowers that
width, so cascades terminate.
"""

import random

from diskplex import (
    MoveKind,
    SurfaceComponentModel,
    SurgeryMove,
    apply_surgery,
    available_moves,
    compare_width,
    verify_width_decrease,
    width,
)

genus2 = SurfaceComponentModel(euler=-2, weight=10)
torus = SurfaceComponentModel(euler=0, weight=4)
surface = (genus2, torus)
print("surface width:", width(surface))

# A non-separating compression raises euler by 2 on one component.
move = SurgeryMove(MoveKind.HONEST_COMPRESS_NONSEP, 0)
verdict = verify_width_decrease(surface, move)
for line in verdict.render_lines():
    print(" ", line)

# A separating compression splits a component; both sides must be
# strictly simpler and the books must balance.
move = SurgeryMove(MoveKind.HONEST_COMPRESS_SEP, 0, split=((0, 6), (0, 4)))
verdict = verify_width_decrease(surface, move)
for line in verdict.render_lines():
    print(" ", line)

# Dishonest moves spend weight instead of genus.
move = SurgeryMove(MoveKind.DISHONEST, 1, k=3)
verdict = verify_width_decrease(surface, move)
for line in verdict.render_lines():
    print(" ", line)

# A full cascade: apply random moves until none remain.  Termination is
# guaranteed because the width strictly decreases each step.
print()
rng = random.Random(2)
step = 0
while True:
    moves = available_moves(surface)
    if not moves:
        break
    move = rng.choice(moves)
    before = width(surface)
    surface = apply_surgery(surface, move)
    step += 1
    print(f"step {step:2d}: {move.describe():45s} {before} -> {width(surface)}")
print("final surface:", [(c.euler, c.weight) for c in surface])
print("widths comparable:", compare_width(width(surface), width(())).name)
