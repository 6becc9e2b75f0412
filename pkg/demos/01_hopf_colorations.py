"""The Hopf link, colored two ways.

Run: python3 demos/01_hopf_colorations.py
"""

from chroma_skein import (
    all_colorations_F,
    braid_closure,
    deciding_plan,
    evaluate_F,
    jones,
    partition_label,
    render,
    sv_substitute_half,
)
from chroma_skein.oracle import format_s

# Closing the braid s1^-1 s1^-1 gives two circles linked by two negative crossings.
hopf = braid_closure([-1, -1], ["a", "b"])
print("crossings:", [(c.id, c.sign) for c in hopf.crossings])

# Walking component a from its base edge, c2 is the first crossing met on top,
# so the recursion expands there.
print("deciding:", deciding_plan(hopf))

# Different colors on the two circles...
print("F, two colors :", render(evaluate_F(hopf)))

# ...versus one color.  The values differ, so F sees the coloration.
for partition, value in all_colorations_F(hopf).items():
    print(f"  {partition_label(partition):8} {render(value)}")

# With one color, w = s and t = s^2 turn F into the Jones polynomial,
# computed here a second time from the Kauffman bracket.
mono = hopf.with_colors(["a", "a"])
print("specialized   :", render(sv_substitute_half(evaluate_F(mono))))
print("bracket Jones :", format_s(jones(mono)))
