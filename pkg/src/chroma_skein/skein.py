"""Evaluation of the colored skein invariant F.

The diagram is walked from its base points in component order; every
crossing first met on the over strand is *deciding*.  Switching all of
them gives an ascending diagram, i.e. an unlink, whose value is known in
closed form.  At the first deciding crossing the value is rewritten
through the skein relations as a combination of

* ``S``  - the diagram with that crossing switched,
* ``S~`` - ``S`` with the two strand colors merged (only when they differ),
* ``R``  - the oriented smoothing (colors merged), one crossing fewer,

and the recursion continues on each.  ``S`` and ``S~`` keep the traversal,
so their deciding list is the tail of the current one; ``R`` is re-planned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagram import (
    Component,
    Crossing,
    Diagram,
    DiagramError,
    coloration_partition,
    merge_colors,
    set_partitions,
    smooth,
    switch,
)
from .poly import LaurentPoly, SkeinValue, make_y, sv_mul

__all__ = [
    "PlanStep",
    "deciding_plan",
    "ascending",
    "ascending_merged",
    "unlink_value",
    "canonical_form",
    "memo_key",
    "Evaluator",
    "evaluate_F",
    "all_colorations_F",
    "partition_label",
    "CrossingFamily",
    "crossing_family",
    "MAX_COLORATION_COMPONENTS",
]

MAX_COLORATION_COMPONENTS = 8


@dataclass(frozen=True)
class PlanStep:
    crossing: str
    sign: int
    same_color: bool


def _walk(d: Diagram) -> Iterable[tuple[Crossing, bool]]:
    """(crossing, passing over?) in traversal order, every passage."""
    head = d.head
    for comp in d.components:
        if not comp.edges:
            continue
        start = e = comp.edges[0]
        while True:
            c, over = head[e]
            yield c, over
            e = c.over_out if over else c.under_out
            if e == start:
                break


def deciding_plan(d: Diagram) -> list[PlanStep]:
    """Crossings whose first passage is on the over strand, in encounter order."""
    seen: set[str] = set()
    plan = []
    colors = d.edge_color
    for c, over in _walk(d):
        if c.id in seen:
            continue
        seen.add(c.id)
        if over:
            plan.append(PlanStep(c.id, c.sign, colors[c.under_in] == colors[c.over_in]))
    return plan


def ascending(d: Diagram) -> Diagram:
    """Switch every deciding crossing (the standard ascending diagram)."""
    for step in deciding_plan(d):
        d = switch(d, step.crossing)
    return d


def ascending_merged(d: Diagram) -> Diagram:
    """The ascending diagram with the strand colors of every deciding crossing merged."""
    for step in deciding_plan(d):
        a, b = d.strand_colors(step.crossing)
        d = merge_colors(switch(d, step.crossing), a, b)
    return d


@dataclass(frozen=True)
class CrossingFamily:
    """The diagrams that a skein relation at one crossing ties together."""

    positive: Diagram
    negative: Diagram
    smoothed: Diagram
    positive_merged: Diagram


def crossing_family(d: Diagram, cid: str) -> CrossingFamily:
    """K+, K-, the smoothing, and K+ with the two strand colors merged."""
    a, b = d.strand_colors(cid)
    other = switch(d, cid)
    pos, neg = (d, other) if d.crossing(cid).sign > 0 else (other, d)
    return CrossingFamily(pos, neg, smooth(d, cid), merge_colors(pos, a, b))


_UNLINK_CACHE = {}


def unlink_value(n: int, c: int) -> SkeinValue:
    """y^(n-c) / (wx)^(n-1) for n unlinked circles carrying c colors."""
    if not 1 <= c <= n:
        raise ValueError(f"need 1 <= colors <= components, got n={n}, c={c}")
    key = (n, c)
    if key not in _UNLINK_CACHE:
        y = make_y()
        num = y.num ** (n - c)
        _UNLINK_CACHE[key] = SkeinValue(num.shift((-(n - 1), -(n - 1), 0)), n - c)
    return _UNLINK_CACHE[key]


def canonical_form(d: Diagram) -> Diagram:
    """Relabel edges, crossings and colors by order of first appearance along the traversal.

    Two diagrams with the same canonical form have the same Gauss data,
    component order, base points and coloration partition, so they are the
    same evaluation subproblem.
    """
    emap: dict[int, int] = {}
    cmap: dict[str, str] = {}
    colmap: dict[str, str] = {}
    for comp in d.components:
        colmap.setdefault(comp.color, str(len(colmap)))
        for e in comp.edges:
            emap[e] = len(emap) + 1
            c, _ = d.head[e]
            if c.id not in cmap:
                cmap[c.id] = f"k{len(cmap) + 1}"
    order = sorted(d.crossings, key=lambda c: int(cmap[c.id][1:]))
    xs = tuple(Crossing(cmap[c.id], c.sign, emap[c.under_in], emap[c.under_out],
                        emap[c.over_in], emap[c.over_out]) for c in order)
    comps = tuple(Component(tuple(emap[e] for e in comp.edges), colmap[comp.color])
                  for comp in d.components)
    return Diagram(xs, comps)


def memo_key(d: Diagram) -> bytes:
    k = canonical_form(d)
    parts = [f"{c.sign:+d}:{c.under_in},{c.under_out},{c.over_in},{c.over_out}"
             for c in k.crossings]
    comps = [f"{comp.color}@{comp.edges[0] if comp.edges else '-'}" for comp in k.components]
    return ("|".join(parts) + "#" + "|".join(comps)).encode()


def _mono(ex: int, ew: int, et: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(ex, ew, et, coeff=coeff)


def _lp(*terms: tuple[int, int, int, int]) -> SkeinValue:
    out = LaurentPoly()
    for ex, ew, et, c in terms:
        out = out + _mono(ex, ew, et, c)
    return SkeinValue(out)


# coefficient table, keyed by (same color, sign)
#   same color, +:  F = t w^2 F(S) + w (t - 1) F(R)
#   same color, -:  F = t^-1 w^-2 F(S) + w^-1 (t^-1 - 1) F(R)
#   distinct,   +:  F = w^2 F(S) + w^2 (t - 1) F(S~) + w (t - 1) F(R)
#   distinct,   -:  F = w^-2 F(S) + w^-2 (t^-1 - 1) F(S~) + w^-1 (t^-1 - 1) F(R)
_COEFFS = {
    (True, 1): (_lp((0, 2, 1, 1)), None, _lp((0, 1, 1, 1), (0, 1, 0, -1))),
    (True, -1): (_lp((0, -2, -1, 1)), None, _lp((0, -1, -1, 1), (0, -1, 0, -1))),
    (False, 1): (_lp((0, 2, 0, 1)), _lp((0, 2, 1, 1), (0, 2, 0, -1)),
                 _lp((0, 1, 1, 1), (0, 1, 0, -1))),
    (False, -1): (_lp((0, -2, 0, 1)), _lp((0, -2, -1, 1), (0, -2, 0, -1)),
                  _lp((0, -1, -1, 1), (0, -1, 0, -1))),
}


class Evaluator:
    """Skein recursion with an optional memo table shared across calls.

    The table maps canonical forms to values, so it may be kept between
    evaluations of unrelated diagrams.
    """

    def __init__(self, memoize: bool = True, cache: dict | None = None):
        self.memoize = memoize
        self.cache: dict = {} if cache is None else cache
        self.calls = 0
        self.hits = 0

    def __call__(self, d: Diagram) -> SkeinValue:
        return self._eval(canonical_form(d))

    def _eval(self, d: Diagram) -> SkeinValue:
        self.calls += 1
        if self.memoize:
            hit = self.cache.get(d)
            if hit is not None:
                self.hits += 1
                return hit
        val = self._expand(d)
        if self.memoize:
            self.cache[d] = val
        return val

    def _expand(self, d: Diagram) -> SkeinValue:
        plan = deciding_plan(d)
        if not plan:
            return unlink_value(len(d.components), len(d.color_set))
        step = plan[0]
        a, b = d.strand_colors(step.crossing)
        c_s, c_merged, c_r = _COEFFS[step.same_color, step.sign]
        s = switch(d, step.crossing)
        val = sv_mul(c_s, self._eval(canonical_form(s)))
        if c_merged is not None:
            val = val + sv_mul(c_merged, self._eval(canonical_form(merge_colors(s, a, b))))
        val = val + sv_mul(c_r, self._eval(canonical_form(smooth(d, step.crossing))))
        return val


def evaluate_F(d: Diagram, *, memoize: bool = True, cache: dict | None = None) -> SkeinValue:
    """Value of the invariant on ``d``."""
    return Evaluator(memoize=memoize, cache=cache)(d)


def partition_label(partition: frozenset[frozenset[int]]) -> str:
    """``{1 2}{3}``-style label with 1-based component numbers, blocks sorted."""
    blocks = sorted(sorted(i + 1 for i in b) for b in partition)
    return "".join("{" + " ".join(map(str, b)) + "}" for b in blocks)


def all_colorations_F(d: Diagram, limit: int = MAX_COLORATION_COMPONENTS,
                      cache: dict | None = None) -> dict[frozenset[frozenset[int]], SkeinValue]:
    """F for every coloration class (set partition) of the components of ``d``."""
    n = len(d.components)
    if n > limit:
        raise DiagramError(f"{n} components exceeds the coloration limit {limit}")
    ev = Evaluator(cache={} if cache is None else cache)
    out = {}
    for rgs in set_partitions(n):
        colored = d.with_colors([str(i) for i in rgs])
        out[coloration_partition(colored)] = ev(colored)
    return out
