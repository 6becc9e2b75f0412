"""Jones polynomial through the Kauffman bracket state sum.

This is the independent check on the skein engine: it shares only the
diagram model, never the polynomial arithmetic or the recursion.
Polynomials here are plain ``{exponent: coefficient}`` dicts.
"""

from __future__ import annotations

import cmath
from itertools import product

from .diagram import Diagram

__all__ = ["kauffman_bracket", "writhe", "jones", "homfly_l", "homfly_m", "format_s"]


def _add_into(acc: dict[int, int], poly: dict[int, int], shift: int = 0, scale: int = 1) -> None:
    for e, c in poly.items():
        v = acc.get(e + shift, 0) + scale * c
        if v:
            acc[e + shift] = v
        else:
            acc.pop(e + shift, None)


def _mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for ea, ca in a.items():
        _add_into(out, b, ea, ca)
    return out


_LOOP = {2: -1, -2: -1}  # -A^2 - A^-2


def _count_loops(pairs: list[tuple[int, int]], edges: list[int]) -> int:
    parent = {e: e for e in edges}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    n = len(edges)
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            n -= 1
    return n


def kauffman_bracket(d: Diagram) -> dict[int, int]:
    """<D> with <O> = 1, as exponent-of-A -> coefficient. Colors are ignored.

    Brute force over all 2^n states; fine up to a dozen or so crossings.
    """
    free = sum(1 for c in d.components if not c.edges)
    if not d.crossings and not free:
        raise ValueError("empty diagram")
    edges = sorted(d.head)
    # counterclockwise port edges from under_in: (a, b, c, d)
    quads = []
    for x in d.crossings:
        if x.sign > 0:
            quads.append((x.under_in, x.over_out, x.under_out, x.over_in))
        else:
            quads.append((x.under_in, x.over_in, x.under_out, x.over_out))

    loop_powers: dict[int, dict[int, int]] = {0: {0: 1}}

    def loop_pow(k: int) -> dict[int, int]:
        if k not in loop_powers:
            loop_powers[k] = _mul(loop_pow(k - 1), _LOOP)
        return loop_powers[k]

    total: dict[int, int] = {}
    n = len(quads)
    for state in product((0, 1), repeat=n):
        pairs = []
        a_count = 0
        for (p, q, r, s), b in zip(quads, state):
            if b == 0:  # A-smoothing joins (a,b) and (c,d)
                pairs += [(p, q), (r, s)]
                a_count += 1
            else:       # B-smoothing joins (a,d) and (b,c)
                pairs += [(p, s), (q, r)]
        loops = _count_loops(pairs, edges) + free
        _add_into(total, loop_pow(loops - 1), a_count - (n - a_count))
    return total


def writhe(d: Diagram) -> int:
    return sum(c.sign for c in d.crossings)


def jones(d: Diagram) -> dict[int, int]:
    """V(L) as exponent-of-s -> coefficient, with s = t^(1/2).

    V = (-A^3)^(-writhe) <D> evaluated at A = s^(-1/2) (so A^-4 = t).
    """
    w = writhe(d)
    sign = -1 if w % 2 else 1
    out = {}
    for e, c in kauffman_bracket(d).items():
        a_exp = e - 3 * w
        if a_exp % 2:
            raise ArithmeticError(f"A-exponent {a_exp} does not give an integral power of s")
        out[-a_exp // 2] = sign * c
    return out


def homfly_l(w: complex, t: complex) -> complex:
    """HOMFLY ``l`` matching monochrome F: i / (w sqrt t)."""
    return 1j / (w * cmath.sqrt(t))


def homfly_m(t: complex) -> complex:
    """HOMFLY ``m`` matching monochrome F: i (1/sqrt t - sqrt t)."""
    r = cmath.sqrt(t)
    return 1j * (1 / r - r)


def format_s(poly: dict[int, int]) -> str:
    """Render an s-polynomial, highest power first."""
    if not poly:
        return "0"
    parts = []
    for i, e in enumerate(sorted(poly, reverse=True)):
        c = poly[e]
        mono = "" if e == 0 else ("s" if e == 1 else f"s^{e}")
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)
