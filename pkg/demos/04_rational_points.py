"""Exact evaluation at rational points, and the HOMFLY-style relation numerically.

Run: python3 demos/04_rational_points.py
"""

import cmath
from fractions import Fraction

from chroma_skein import braid_closure, evaluate_F, smooth, sv_eval, switch
from chroma_skein.oracle import homfly_l, homfly_m

trefoil = braid_closure([-1, -1, -1], ["a", "a"])
value = evaluate_F(trefoil)
for point in [(1, 2, 3), (Fraction(1, 2), Fraction(-3, 5), 7)]:
    print(f"F(trefoil) at (x, w, t) = ({', '.join(map(str, point))}):", sv_eval(value, *point))

# l F(K+) + l^-1 F(K-) + m F(K0) = 0 for a same-color crossing.
x0, w0, t0 = 2, Fraction(3, 2), 5
neg = trefoil
pos = switch(trefoil, "c1")
zero = smooth(trefoil, "c1")
f = {name: complex(sv_eval(evaluate_F(k), x0, w0, t0)) for name, k in
     [("+", pos), ("-", neg), ("0", zero)]}
ell, m = homfly_l(float(w0), t0), homfly_m(t0)
residual = ell * f["+"] + f["-"] / ell + m * f["0"]
print("relation residual:", abs(residual), cmath.isclose(residual, 0, abs_tol=1e-12))
