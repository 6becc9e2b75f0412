"""Oriented colored link diagrams.

A crossing stores its four edges by role (under/over x in/out) and its
sign.  Edges are integers; every edge leaves exactly one crossing port
and enters exactly one.  Components are kept in traversal order, each
starting at its base-point edge; a component with no edges is a free
loop (a crossing-free unknotted circle).

Port geometry: seen from above, the ports of a positive crossing read
counterclockwise as (under_in, over_out, under_out, over_in); for a
negative crossing (under_in, over_in, under_out, over_out).  The Kauffman
bracket and the face structure used by the Reidemeister moves rely on
this convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Color",
    "Crossing",
    "Component",
    "Diagram",
    "DiagramError",
    "parse_diagram",
    "load_diagram",
    "dump_diagram",
    "components",
    "switch",
    "merge_colors",
    "smooth",
    "mirror",
    "reverse_all",
    "disjoint_union",
    "connected_sum",
    "braid_closure",
    "parse_braid_word",
    "canonical_coloration",
    "colorations_equivalent",
    "coloration_partition",
    "set_partitions",
    "relabel",
    "unlink",
]

Color = str


class DiagramError(ValueError):
    """Malformed or inconsistent diagram data."""


@dataclass(frozen=True)
class Crossing:
    id: str
    sign: int
    under_in: int
    under_out: int
    over_in: int
    over_out: int

    def switched(self) -> "Crossing":
        return Crossing(self.id, -self.sign, self.over_in, self.over_out,
                        self.under_in, self.under_out)

    def reversed(self) -> "Crossing":
        return Crossing(self.id, self.sign, self.under_out, self.under_in,
                        self.over_out, self.over_in)

    def ports(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.under_out, self.over_in, self.over_out)

    def ccw(self) -> tuple[str, str, str, str]:
        """Port role names in counterclockwise order, starting at under_in."""
        if self.sign > 0:
            return ("under_in", "over_out", "under_out", "over_in")
        return ("under_in", "over_in", "under_out", "over_out")

    def renamed(self, emap) -> "Crossing":
        return Crossing(self.id, self.sign, emap(self.under_in), emap(self.under_out),
                        emap(self.over_in), emap(self.over_out))


@dataclass(frozen=True)
class Component:
    edges: tuple[int, ...]
    color: Color

    @property
    def is_free_loop(self) -> bool:
        return not self.edges

    @property
    def base_point(self) -> int | None:
        return self.edges[0] if self.edges else None


@dataclass(frozen=True)
class Diagram:
    """Immutable colored link diagram; ``components`` is the component order."""

    crossings: tuple[Crossing, ...]
    components: tuple[Component, ...]

    # -- derived lookups ------------------------------------------------

    @cached_property
    def _by_id(self) -> dict[str, Crossing]:
        return {c.id: c for c in self.crossings}

    @cached_property
    def head(self) -> dict[int, tuple[Crossing, bool]]:
        """edge -> (crossing it enters, entered on the over strand?)"""
        out = {}
        for c in self.crossings:
            out[c.under_in] = (c, False)
            out[c.over_in] = (c, True)
        return out

    @cached_property
    def tail(self) -> dict[int, tuple[Crossing, bool]]:
        """edge -> (crossing it leaves, left on the over strand?)"""
        out = {}
        for c in self.crossings:
            out[c.under_out] = (c, False)
            out[c.over_out] = (c, True)
        return out

    @cached_property
    def edge_color(self) -> dict[int, Color]:
        return {e: comp.color for comp in self.components for e in comp.edges}

    @cached_property
    def edge_component(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp.edges}

    def crossing(self, cid: str) -> Crossing:
        try:
            return self._by_id[cid]
        except KeyError:
            raise DiagramError(f"unknown crossing {cid!r}") from None

    @property
    def edges(self) -> list[int]:
        return sorted(self.head)

    @property
    def colors(self) -> tuple[Color, ...]:
        return tuple(c.color for c in self.components)

    @property
    def free_loops(self) -> tuple[Color, ...]:
        return tuple(c.color for c in self.components if c.is_free_loop)

    @property
    def base_points(self) -> tuple[int | None, ...]:
        return tuple(c.base_point for c in self.components)

    @property
    def color_set(self) -> frozenset[Color]:
        return frozenset(self.colors)

    def strand_colors(self, cid: str) -> tuple[Color, Color]:
        """(under color, over color) at a crossing."""
        c = self.crossing(cid)
        return self.edge_color[c.under_in], self.edge_color[c.over_in]

    def __len__(self) -> int:
        return len(self.crossings)

    # -- reorderings ------------------------------------------------------

    def with_order(self, order: Sequence[int]) -> "Diagram":
        """Reorder components: position i takes current component ``order[i]``."""
        if sorted(order) != list(range(len(self.components))):
            raise DiagramError(f"{list(order)} is not a permutation of the components")
        return Diagram(self.crossings, tuple(self.components[i] for i in order))

    def with_base_point(self, index: int, edge: int) -> "Diagram":
        comp = self.components[index]
        if edge not in comp.edges:
            raise DiagramError(f"edge {edge} is not on component {index}")
        k = comp.edges.index(edge)
        comps = list(self.components)
        comps[index] = Component(comp.edges[k:] + comp.edges[:k], comp.color)
        return Diagram(self.crossings, tuple(comps))

    def with_colors(self, colors: Sequence[Color]) -> "Diagram":
        if len(colors) != len(self.components):
            raise DiagramError("one color per component required")
        return Diagram(self.crossings, tuple(
            Component(c.edges, str(col)) for c, col in zip(self.components, colors)))

    def recolored(self, mapping) -> "Diagram":
        return Diagram(self.crossings, tuple(
            Component(c.edges, mapping(c.color)) for c in self.components))

    def canonical_order(self) -> "Diagram":
        """Components by ascending minimal edge, each based at its minimal edge; free loops last."""
        loops = [c for c in self.components if c.is_free_loop]
        ring = sorted((c for c in self.components if c.edges), key=lambda c: min(c.edges))
        out = []
        for c in ring:
            k = c.edges.index(min(c.edges))
            out.append(Component(c.edges[k:] + c.edges[:k], c.color))
        return Diagram(self.crossings, tuple(out + loops))

    def validate(self) -> "Diagram":
        ins: dict[int, int] = {}
        outs: dict[int, int] = {}
        ids = set()
        for c in self.crossings:
            if c.id in ids:
                raise DiagramError(f"duplicate crossing id {c.id!r}")
            ids.add(c.id)
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing {c.id!r}: sign must be +1 or -1")
            for e in (c.under_in, c.over_in):
                ins[e] = ins.get(e, 0) + 1
            for e in (c.under_out, c.over_out):
                outs[e] = outs.get(e, 0) + 1
        for e in set(ins) | set(outs):
            if ins.get(e, 0) != 1 or outs.get(e, 0) != 1:
                raise DiagramError(
                    f"edge {e} must enter and leave exactly once "
                    f"(in {ins.get(e, 0)}x, out {outs.get(e, 0)}x)")
        seen: set[int] = set()
        for comp in self.components:
            if not comp.edges:
                continue
            for a, b in zip(comp.edges, comp.edges[1:] + comp.edges[:1]):
                if self.successor(a) != b:
                    raise DiagramError(f"component {comp.edges} does not follow the strands")
            if seen.intersection(comp.edges):
                raise DiagramError("components overlap")
            seen.update(comp.edges)
        if seen != set(ins):
            raise DiagramError("components do not cover every edge")
        return self

    def successor(self, e: int) -> int:
        c, over = self.head[e]
        return c.over_out if over else c.under_out

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return dump_diagram(self)


# -- construction helpers -------------------------------------------------


def _trace(head: dict[int, tuple[Crossing, bool]], start: int) -> tuple[int, ...]:
    cyc = [start]
    c, over = head[start]
    e = c.over_out if over else c.under_out
    while e != start:
        cyc.append(e)
        c, over = head[e]
        e = c.over_out if over else c.under_out
    return tuple(cyc)


def _head_map(crossings: Iterable[Crossing]) -> dict[int, tuple[Crossing, bool]]:
    head = {}
    for c in crossings:
        head[c.under_in] = (c, False)
        head[c.over_in] = (c, True)
    return head


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, a: int) -> int:
        p = self.parent.setdefault(a, a)
        if p != a:
            p = self.find(p)
            self.parent[a] = p
        return p

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller id so split-then-rejoin restores labels
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _rebuild(crossings: Sequence[Crossing], edge_color: dict[int, Color],
             hints: Sequence[tuple[str, object]], joins: Iterable[tuple[int, int]] = (),
             canonical: bool = False) -> Diagram:
    """Assemble a diagram after crossings were removed, added or rewired.

    ``joins`` identifies edge pairs (strands re-connected through a deleted
    crossing).  ``hints`` lists the previous components in order, as
    ``("edge", base_edge)`` or ``("loop", color)``; the new component order
    follows it where components survive.  Edge classes no longer touching
    any crossing become free loops.
    """
    uf = _UnionFind()
    for a, b in joins:
        uf.union(a, b)
    for e in edge_color:
        uf.find(e)
    xs = tuple(c.renamed(uf.find) for c in crossings)
    head = _head_map(xs)

    colors: dict[int, Color] = {}
    for e, col in edge_color.items():
        r = uf.find(e)
        prev = colors.setdefault(r, col)
        if prev != col:
            raise DiagramError(f"edges joined into one strand carry colors {prev!r} and {col!r}")
    orphan = {r: colors[r] for r in colors if r not in head}

    comps: list[Component] = []
    covered: set[int] = set()
    placed_orphans: set[int] = set()

    def add_cycle(start: int) -> None:
        cyc = _trace(head, start)
        cols = {colors[e] for e in cyc if e in colors}
        if len(cols) > 1:
            raise DiagramError(f"component through edge {start} has several colors {sorted(cols)}")
        comps.append(Component(cyc, cols.pop()))
        covered.update(cyc)

    for kind, val in hints:
        if kind == "loop":
            comps.append(Component((), val))
            continue
        r = uf.find(val)
        if r in head:
            if r not in covered:
                add_cycle(r)
        elif r in orphan and r not in placed_orphans:
            comps.append(Component((), orphan[r]))
            placed_orphans.add(r)
    for e in sorted(head):
        if e not in covered:
            add_cycle(e)
    for r in sorted(orphan):
        if r not in placed_orphans:
            comps.append(Component((), orphan[r]))
    d = Diagram(xs, tuple(comps))
    return d.canonical_order() if canonical else d


def _hints(d: Diagram) -> list[tuple[str, object]]:
    return [("edge", c.edges[0]) if c.edges else ("loop", c.color) for c in d.components]


def _next_edge(d: Diagram) -> int:
    return max(d.head, default=0) + 1


def _fresh_crossing_id(d: Diagram, stem: str = "r") -> Iterator[str]:
    taken = set(d._by_id)
    i = 1
    while True:
        cid = f"{stem}{i}"
        if cid not in taken:
            taken.add(cid)
            yield cid
        i += 1


def unlink(colors: Sequence[Color]) -> Diagram:
    """Crossing-free diagram: one free loop per color entry."""
    return Diagram((), tuple(Component((), str(c)) for c in colors))


# -- parsing ----------------------------------------------------------------


def parse_diagram(text: str | dict) -> Diagram:
    """Build a validated diagram from the JSON document format.

    ``colors[i]`` colors the i-th component in canonical order (ascending
    minimal edge id, free loops after in list order).  Optional ``order``
    (permutation of canonical indices) and ``base_points`` (one edge per
    canonical component, ``null`` for free loops) override the defaults.
    """
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict):
        raise DiagramError("diagram document must be a JSON object")
    unknown = set(doc) - {"crossings", "free_loops", "colors", "order", "base_points"}
    if unknown:
        raise DiagramError(f"unknown keys {sorted(unknown)}")

    crossings = []
    for i, raw in enumerate(doc.get("crossings", [])):
        try:
            crossings.append(Crossing(
                id=str(raw.get("id", f"c{i + 1}")), sign=int(raw["sign"]),
                under_in=int(raw["under_in"]), under_out=int(raw["under_out"]),
                over_in=int(raw["over_in"]), over_out=int(raw["over_out"])))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise DiagramError(f"crossing #{i}: {exc!r}") from None
    loops = [str(c) for c in doc.get("free_loops", [])]

    _validate_ports(crossings)
    head = _head_map(crossings)
    cycles = []
    covered: set[int] = set()
    for e in sorted(head):
        if e not in covered:
            cyc = _trace(head, e)
            cycles.append(cyc)
            covered.update(cyc)

    colors = doc.get("colors")
    n = len(cycles) + len(loops)
    if colors is None:
        if cycles:
            raise DiagramError("missing 'colors'")
        colors = []
    colors = [str(c) for c in colors]
    if loops and len(colors) == len(cycles):
        colors = colors + loops
    if len(colors) != n:
        raise DiagramError(f"{len(colors)} colors given for {n} components")
    if any(colors[len(cycles) + i] != loops[i] for i in range(len(loops))):
        raise DiagramError("colors of free loops disagree with 'free_loops'")

    comps = [Component(cyc, col) for cyc, col in zip(cycles, colors)]
    comps += [Component((), col) for col in colors[len(cycles):]]

    bps = doc.get("base_points")
    if bps is not None:
        if len(bps) != n:
            raise DiagramError("base_points needs one entry per component")
        for i, bp in enumerate(bps):
            if bp is None:
                continue
            comp = comps[i]
            if int(bp) not in comp.edges:
                raise DiagramError(f"base point {bp} is not on component {i}")
            k = comp.edges.index(int(bp))
            comps[i] = Component(comp.edges[k:] + comp.edges[:k], comp.color)
    d = Diagram(tuple(crossings), tuple(comps))
    if "order" in doc:
        d = d.with_order([int(i) for i in doc["order"]])
    return d.validate()


def _validate_ports(crossings: Sequence[Crossing]) -> None:
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for c in crossings:
        if c.sign not in (1, -1):
            raise DiagramError(f"crossing {c.id!r}: sign must be +1 or -1")
        if c.under_in == c.over_in or c.under_out == c.over_out:
            raise DiagramError(f"crossing {c.id!r}: port collision")
        for e in (c.under_in, c.over_in):
            ins[e] = ins.get(e, 0) + 1
        for e in (c.under_out, c.over_out):
            outs[e] = outs.get(e, 0) + 1
    for e in sorted(set(ins) | set(outs)):
        if ins.get(e, 0) != 1 or outs.get(e, 0) != 1:
            raise DiagramError(
                f"edge {e} appears {ins.get(e, 0) + outs.get(e, 0)} times "
                f"(in {ins.get(e, 0)}, out {outs.get(e, 0)}); expected one in, one out")
    if len({c.id for c in crossings}) != len(crossings):
        raise DiagramError("duplicate crossing ids")


def load_diagram(path) -> Diagram:
    with open(path) as fh:
        return parse_diagram(fh.read())


def dump_diagram(d: Diagram) -> dict:
    """JSON-ready dict; round-trips through :func:`parse_diagram`."""
    canon = d.canonical_order()
    index = {}
    for i, comp in enumerate(canon.components):
        key = min(comp.edges) if comp.edges else None
        index.setdefault(key, []).append(i)
    order = []
    loop_slots = iter(index.get(None, []))
    for comp in d.components:
        order.append(next(loop_slots) if not comp.edges else index[min(comp.edges)][0])
    base_points = [None] * len(canon.components)
    for pos, comp in zip(order, d.components):
        base_points[pos] = comp.base_point
    doc = {
        "crossings": [
            {"id": c.id, "sign": c.sign, "under_in": c.under_in, "under_out": c.under_out,
             "over_in": c.over_in, "over_out": c.over_out}
            for c in d.crossings],
        "free_loops": [c.color for c in canon.components if c.is_free_loop],
        "colors": [c.color for c in canon.components],
    }
    if order != list(range(len(order))):
        doc["order"] = order
    if base_points != list(canon.base_points):
        doc["base_points"] = base_points
    return doc


# -- basic operations ------------------------------------------------------


def components(d: Diagram) -> list[Component]:
    """Components in the diagram's order (free loops have no edges)."""
    return list(d.components)


def switch(d: Diagram, cid: str) -> Diagram:
    """Exchange over and under strands at ``cid``; the sign flips."""
    d.crossing(cid)  # raises on an unknown id
    xs = tuple(x.switched() if x.id == cid else x for x in d.crossings)
    return Diagram(xs, d.components)


def merge_colors(d: Diagram, a: Color, b: Color) -> Diagram:
    """Recolor every component colored ``a`` or ``b`` with ``min(a, b)``."""
    present = d.color_set
    for col in (a, b):
        if col not in present:
            raise DiagramError(f"unknown color {col!r}")
    if a == b:
        return d
    keep = min(a, b)
    return d.recolored(lambda c: keep if c in (a, b) else c)


def smooth(d: Diagram, cid: str) -> Diagram:
    """Oriented smoothing at ``cid``, merging the two strand colors.

    The result is put in canonical component order.
    """
    c = d.crossing(cid)
    a, b = d.edge_color[c.under_in], d.edge_color[c.over_in]
    keep = min(a, b)
    recol = (lambda col: keep if col in (a, b) else col) if a != b else (lambda col: col)
    edge_color = {e: recol(col) for e, col in d.edge_color.items()}
    hints = [("loop", recol(comp.color)) if comp.is_free_loop else ("edge", comp.edges[0])
             for comp in d.components]
    rest = [x for x in d.crossings if x.id != cid]
    joins = [(c.under_in, c.over_out), (c.over_in, c.under_out)]
    return _rebuild(rest, edge_color, hints, joins, canonical=True)


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing."""
    return Diagram(tuple(c.switched() for c in d.crossings), d.components)


def reverse_all(d: Diagram) -> Diagram:
    """Reverse the orientation of every component, keeping base edges."""
    comps = tuple(Component(c.edges[:1] + c.edges[:0:-1], c.color) if c.edges else c
                  for c in d.components)
    return Diagram(tuple(c.reversed() for c in d.crossings), comps)


def _offset(d: Diagram, shift: int, prefix: str, recolor) -> Diagram:
    xs = tuple(Crossing(prefix + c.id, c.sign, c.under_in + shift, c.under_out + shift,
                        c.over_in + shift, c.over_out + shift) for c in d.crossings)
    comps = tuple(Component(tuple(e + shift for e in c.edges), recolor(c.color))
                  for c in d.components)
    return Diagram(xs, comps)


def _disjoint_colors(taken: set[Color], colors: Iterable[Color]) -> dict[Color, Color]:
    rename = {}
    used = set(taken)
    for col in sorted(set(colors)):
        new = col
        while new in used:
            new += "'"
        rename[col] = new
        used.add(new)
    return rename


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Split union; ``d2``'s colors are renamed away from ``d1``'s."""
    shift = max(d1.head, default=0)
    ids1 = set(d1._by_id)
    prefix = ""
    if ids1 & set(d2._by_id):
        prefix = "b."
        while ids1 & {prefix + i for i in d2._by_id}:
            prefix = "b" + prefix
    rename = _disjoint_colors(set(d1.colors), d2.colors)
    d2s = _offset(d2, shift, prefix, rename.__getitem__)
    return Diagram(d1.crossings + d2s.crossings, d1.components + d2s.components)


def connected_sum(d1: Diagram, comp1: int, d2: Diagram, comp2: int) -> Diagram:
    """Band-sum component ``comp1`` of ``d1`` with ``comp2`` of ``d2`` at their base edges.

    The two color classes of the joined components are merged.
    """
    if not 0 <= comp1 < len(d1.components):
        raise DiagramError(f"unknown component {comp1}")
    if not 0 <= comp2 < len(d2.components):
        raise DiagramError(f"unknown component {comp2}")
    n1 = len(d1.components)
    u = disjoint_union(d1, d2)
    j = n1 + comp2
    a, b = u.components[comp1].color, u.components[j].color
    u = merge_colors(u, a, b)
    c1, c2 = u.components[comp1], u.components[j]
    if c2.is_free_loop or c1.is_free_loop:
        drop = j if c2.is_free_loop else comp1
        return Diagram(u.crossings, u.components[:drop] + u.components[drop + 1:])
    e1, e2 = c1.edges[0], c2.edges[0]
    h1, h2 = u.head[e1][0].id, u.head[e2][0].id

    def rewire(c: Crossing) -> Crossing:
        # e1 now enters where e2 used to, and vice versa
        def f(e, role_in):
            if not role_in:
                return e
            return {e1: e2, e2: e1}.get(e, e)
        return Crossing(c.id, c.sign, f(c.under_in, True), c.under_out,
                        f(c.over_in, True), c.over_out)

    xs = tuple(rewire(c) if c.id in (h1, h2) else c for c in u.crossings)
    hints = _hints(u)
    del hints[j]
    return _rebuild(xs, u.edge_color, hints)


# -- braids -------------------------------------------------------------------


def parse_braid_word(text: str) -> list[int]:
    """``"s1^-1 s2 s1^3"`` -> ``[-1, 2, 1, 1, 1]``; plain integers also accepted."""
    word = []
    for tok in text.replace(",", " ").split():
        if tok.lstrip("-").isdigit():
            word.append(int(tok))
            continue
        if not tok.startswith(("s", "σ")):
            raise DiagramError(f"bad braid generator {tok!r}")
        body = tok[1:]
        gen, _, power = body.partition("^")
        try:
            g, p = int(gen), int(power) if power else 1
        except ValueError:
            raise DiagramError(f"bad braid generator {tok!r}") from None
        word.extend([g if p > 0 else -g] * abs(p))
    return word


def braid_closure(word: Sequence[int], strand_colors: Sequence[Color]) -> Diagram:
    """Trace closure of a braid word (signed 1-based generator indices).

    Strands run upward; in ``s_i`` the strand coming from position ``i``
    passes over, which makes ``s_i`` a positive crossing.
    """
    n = len(strand_colors)
    if n < 1:
        raise DiagramError("at least one strand required")
    pos_edge = list(range(1, n + 1))
    pos_color = [str(c) for c in strand_colors]
    edge_color = {i + 1: pos_color[i] for i in range(n)}
    nxt = n + 1
    xs = []
    for k, g in enumerate(word):
        i = abs(g)
        if g == 0 or i >= n:
            raise DiagramError(f"generator {g} out of range for {n} strands")
        a, b = pos_edge[i - 1], pos_edge[i]
        left_out, right_out = nxt, nxt + 1  # new edges at positions i and i+1
        nxt += 2
        if g > 0:
            xs.append(Crossing(f"c{k + 1}", 1, b, left_out, a, right_out))
        else:
            xs.append(Crossing(f"c{k + 1}", -1, a, right_out, b, left_out))
        ca, cb = pos_color[i - 1], pos_color[i]
        edge_color[left_out], edge_color[right_out] = cb, ca
        pos_edge[i - 1], pos_edge[i] = left_out, right_out
        pos_color[i - 1], pos_color[i] = cb, ca
    joins = [(pos_edge[k], k + 1) for k in range(n)]
    try:
        d = _rebuild(xs, edge_color, [], joins, canonical=True)
    except DiagramError as exc:
        raise DiagramError(f"inconsistent strand colors: {exc}") from None
    return relabel(d)


def relabel(d: Diagram) -> Diagram:
    """Renumber edges 1, 2, ... along the components in order."""
    emap = {}
    for comp in d.components:
        for e in comp.edges:
            emap[e] = len(emap) + 1
    xs = tuple(c.renamed(emap.__getitem__) for c in d.crossings)
    comps = tuple(Component(tuple(emap[e] for e in c.edges), c.color) for c in d.components)
    return Diagram(xs, comps)


# -- colorations --------------------------------------------------------------


def canonical_coloration(colors: Diagram | Sequence[Color]) -> tuple[int, ...]:
    """Rename colors 0, 1, 2, ... by first appearance."""
    if isinstance(colors, Diagram):
        colors = colors.colors
    seen: dict = {}
    return tuple(seen.setdefault(c, len(seen)) for c in colors)


def colorations_equivalent(c1: Sequence[Color], c2: Sequence[Color]) -> bool:
    if len(c1) != len(c2):
        raise DiagramError("colorations are defined on different component sets")
    return canonical_coloration(c1) == canonical_coloration(c2)


def coloration_partition(colors: Diagram | Sequence[Color]) -> frozenset[frozenset[int]]:
    """Blocks of component indices sharing a color."""
    if isinstance(colors, Diagram):
        colors = colors.colors
    blocks: dict = {}
    for i, c in enumerate(colors):
        blocks.setdefault(c, set()).add(i)
    return frozenset(frozenset(b) for b in blocks.values())


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``range(n)`` as restricted growth strings."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)
