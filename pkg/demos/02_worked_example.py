"""Expanding a Whitehead link diagram by hand, one crossing at a time.

Run: python3 demos/02_worked_example.py
"""

from chroma_skein import deciding_plan, evaluate_F, render
from chroma_skein.worked_example import example_diagram, intermediate_diagrams, run_checks

k = example_diagram()
print("components:", [(c.color, c.edges) for c in k.components])
print("deciding  :", [(s.crossing, s.sign) for s in deciding_plan(k)])

# I is positive and joins different colors, so three diagrams come out of it:
# switched (K1), switched with colors merged (K2), smoothed (K3).
# II is then expanded inside each of those.
for name, d in intermediate_diagrams(k).items():
    shape = f"{len(d.crossings)} crossings, {len(d.components)} comps, {len(d.color_set)} colors"
    print(f"{name:3} {shape:34} F = {render(evaluate_F(d))}")

print()
for check in run_checks():
    print(check.report())
