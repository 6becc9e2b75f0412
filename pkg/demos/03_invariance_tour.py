"""Random Reidemeister moves leave F alone; a naive statistic does not survive.

Run: python3 demos/03_invariance_tour.py
"""

import random

from chroma_skein import braid_closure, deciding_plan, evaluate_F, random_move, render

rng = random.Random(11)
d = braid_closure([1, -2, 1, -2], ["a"] * 3)     # figure-eight knot
reference = evaluate_F(d)
print("start:", render(reference))

for step in range(8):
    move, site, d = random_move(d, rng)
    same = evaluate_F(d) == reference
    print(f"{step}: {move:4} -> {len(d.crossings):2} crossings, "
          f"deciding {len(deciding_plan(d))}, F unchanged: {same}")

# The number of deciding crossings moved around above while F did not.
# Relabeling the base points changes it as well:
for i, edge in enumerate(d.components[0].edges[:4]):
    e = d.with_base_point(0, edge)
    print(f"base edge {edge}: deciding {len(deciding_plan(e))}, F unchanged: {evaluate_F(e) == reference}")
