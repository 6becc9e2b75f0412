"""Planar structure and Reidemeister moves.

Faces are read off the rotation system fixed by the crossing signs (see
:mod:`chroma_skein.diagram`).  A dart is ``(edge, +1)`` along the edge's
orientation or ``(edge, -1)`` against it; each face is the cycle of darts
having that face on their left.

Moves only act at sites that are realizable in the plane: R2 fingers are
pushed across a face (or between split pieces, which can be placed next
to each other freely), R3 acts on triangular faces whose three strands
are stacked top/middle/bottom.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .diagram import Crossing, Diagram, DiagramError, _UnionFind, _hints, _rebuild

__all__ = [
    "faces",
    "pieces",
    "is_planar",
    "R1Add",
    "R1Remove",
    "R2Add",
    "R2Remove",
    "R3Site",
    "Site",
    "MOVES",
    "find_sites",
    "reidemeister",
    "random_move",
]

Dart = tuple[int, int]


def _arrival_role(d: Diagram, dart: Dart) -> tuple[Crossing, str]:
    e, s = dart
    if s > 0:
        c, over = d.head[e]
        return c, "over_in" if over else "under_in"
    c, over = d.tail[e]
    return c, "over_out" if over else "under_out"


def _next_dart(d: Diagram, dart: Dart) -> Dart:
    c, role = _arrival_role(d, dart)
    ccw = c.ccw()
    q = ccw[(ccw.index(role) - 1) % 4]
    return (getattr(c, q), 1 if q.endswith("_out") else -1)


def faces(d: Diagram) -> list[tuple[Dart, ...]]:
    """Faces of the crossing graph as dart cycles (free loops are not included)."""
    seen: set[Dart] = set()
    out = []
    for e in sorted(d.head):
        for s in (1, -1):
            if (e, s) in seen:
                continue
            cyc = []
            dart = (e, s)
            while dart not in seen:
                seen.add(dart)
                cyc.append(dart)
                dart = _next_dart(d, dart)
            out.append(tuple(cyc))
    return out


def pieces(d: Diagram) -> list[frozenset[int]]:
    """Edge sets of the connected pieces of the crossing graph."""
    uf = _UnionFind()
    for c in d.crossings:
        for e in c.ports():
            uf.union(c.under_in, e)
    groups: dict[int, set[int]] = {}
    for e in d.head:
        groups.setdefault(uf.find(e), set()).add(e)
    return [frozenset(g) for _, g in sorted(groups.items())]


def is_planar(d: Diagram) -> bool:
    """Euler check V - E + F = 2 on every connected piece."""
    fs = faces(d)
    for piece in pieces(d):
        v = len({d.head[e][0].id for e in piece})
        f = sum(1 for face in fs if face[0][0] in piece)
        if v - len(piece) + f != 2:
            return False
    return True


# -- sites ------------------------------------------------------------------


@dataclass(frozen=True)
class R1Add:
    """Add a curl on ``edge`` (or on free loop ``loop``, an index into the components)."""
    edge: int | None
    sign: int
    over_first: bool
    loop: int | None = None


@dataclass(frozen=True)
class R1Remove:
    crossing: str


@dataclass(frozen=True)
class R2Add:
    """Push a finger of ``first`` across ``second``.

    With ``first == second`` the edge is folded across a later stretch of
    itself.

    A side is a dart ``(edge, direction)`` or ``(-1 - loop_index, direction)``
    for a free loop.  ``first_over`` picks which strand ends up on top.
    """
    first: Dart
    second: Dart
    first_over: bool


@dataclass(frozen=True)
class R2Remove:
    crossings: tuple[str, str]


@dataclass(frozen=True)
class R3Site:
    crossings: tuple[str, str, str]


Site = Union[R1Add, R1Remove, R2Add, R2Remove, R3Site]
MOVES = ("R1+", "R1-", "R2+", "R2-", "R3")


def _r1_remove_ok(d: Diagram, c: Crossing) -> bool:
    """A curl: an edge leaving one strand of ``c`` and re-entering on the other, bounding an empty face."""
    curls = [e for e in (c.under_out, c.over_out)
             if (e == c.under_out and e == c.over_in) or (e == c.over_out and e == c.under_in)]
    if not curls:
        return False
    fs = set(faces(d))
    return any(((e, 1),) in fs or ((e, -1),) in fs for e in curls)


def _r2_remove_pairs(d: Diagram) -> list[tuple[str, str]]:
    out = []
    for face in faces(d):
        if len(face) != 2:
            continue
        (e1, _), (e2, _) = face
        if e1 == e2:
            continue
        x1, o1t = d.tail[e1]
        y1, o1h = d.head[e1]
        x2, o2t = d.tail[e2]
        y2, o2h = d.head[e2]
        if x1.id == y1.id or {x1.id, y1.id} != {x2.id, y2.id}:
            continue
        # e1 on the same level at both ends, e2 on the other level
        if o1t == o1h and o2t == o2h and o1t != o2t:
            pair = tuple(sorted((x1.id, y1.id)))
            if pair not in out:
                out.append(pair)
    return out


def _r3_triangles(d: Diagram) -> list[tuple[str, str, str]]:
    out = []
    for face in faces(d):
        if len(face) != 3:
            continue
        edges = [e for e, _ in face]
        if len(set(edges)) != 3:
            continue
        ids = set()
        overs = []
        for e in edges:
            t, ot = d.tail[e]
            h, oh = d.head[e]
            ids.update((t.id, h.id))
            overs.append(int(ot) + int(oh))
        if len(ids) != 3 or sorted(overs) != [0, 1, 2]:
            continue
        key = tuple(sorted(ids))
        if key not in out:
            out.append(key)
    return out


def _sides(d: Diagram) -> list[tuple[int, Dart]]:
    """(piece index, side) for every side that can host a finger."""
    out = []
    ps = pieces(d)
    where = {e: i for i, p in enumerate(ps) for e in p}
    for e in sorted(d.head):
        for s in (1, -1):
            out.append((where[e], (e, s)))
    k = len(ps)
    for i, comp in enumerate(d.components):
        if comp.is_free_loop:
            for s in (1, -1):
                out.append((k, (-1 - i, s)))
            k += 1
    return out


def find_sites(d: Diagram, move: str) -> list[Site]:
    """Every site where ``move`` applies."""
    if move == "R1+":
        sites = []
        targets = [(e, None) for e in sorted(d.head)]
        targets += [(None, i) for i, c in enumerate(d.components) if c.is_free_loop]
        for e, loop in targets:
            for sign in (1, -1):
                for over_first in (False, True):
                    sites.append(R1Add(e, sign, over_first, loop))
        return sites
    if move == "R1-":
        return [R1Remove(c.id) for c in d.crossings if _r1_remove_ok(d, c)]
    if move == "R2-":
        return [R2Remove(p) for p in _r2_remove_pairs(d)]
    if move == "R3":
        return [R3Site(t) for t in _r3_triangles(d)]
    if move == "R2+":
        sites = []
        for _, side in _sides(d):
            for first_over in (True, False):
                sites.append(R2Add(side, side, first_over))
        for face in faces(d):
            for i, a in enumerate(face):
                for b in face[i + 1:]:
                    if a[0] != b[0]:
                        for first_over in (True, False):
                            sites.append(R2Add(a, b, first_over))
        sides = _sides(d)
        for i, (pa, a) in enumerate(sides):
            for pb, b in sides[i + 1:]:
                if pa != pb:
                    for first_over in (True, False):
                        sites.append(R2Add(a, b, first_over))
        return sites
    raise ValueError(f"unknown move {move!r}")


# -- moves ------------------------------------------------------------------


def _loop_to_edge(d: Diagram, side: Dart, fresh: int) -> tuple[Dart, int | None]:
    e, s = side
    if e >= 0:
        return side, None
    return (fresh, s), -1 - e


def _r1_add(d: Diagram, site: R1Add) -> Diagram:
    nxt = max(d.head, default=0) + 1
    cid = _fresh_id(d)
    hints = _hints(d)
    edge_color = dict(d.edge_color)
    crossings = list(d.crossings)
    if site.loop is not None:
        comp = d.components[site.loop]
        if not comp.is_free_loop:
            raise DiagramError(f"component {site.loop} is not a free loop")
        e, loop, tail = nxt, nxt + 1, nxt
        edge_color[e] = edge_color[loop] = comp.color
        hints[site.loop] = ("edge", e)
    else:
        e = site.edge
        if e not in d.head:
            raise DiagramError(f"unknown edge {e}")
        loop, tail = nxt, nxt + 1
        edge_color[loop] = edge_color[tail] = edge_color[e]
        crossings = [_replace_in(c, e, tail) for c in crossings]
    if site.sign not in (1, -1):
        raise DiagramError("sign must be +1 or -1")
    if site.over_first:
        crossings.append(Crossing(cid, site.sign, loop, tail, e, loop))
    else:
        crossings.append(Crossing(cid, site.sign, e, loop, loop, tail))
    return _rebuild(crossings, edge_color, hints)


def _replace_in(c: Crossing, old: int, new: int) -> Crossing:
    if c.under_in == old:
        return Crossing(c.id, c.sign, new, c.under_out, c.over_in, c.over_out)
    if c.over_in == old:
        return Crossing(c.id, c.sign, c.under_in, c.under_out, new, c.over_out)
    return c


def _fresh_id(d: Diagram, k: int = 1) -> str | list[str]:
    taken = {c.id for c in d.crossings}
    out = []
    i = 1
    while len(out) < k:
        cid = f"r{i}"
        if cid not in taken:
            out.append(cid)
        i += 1
    return out[0] if k == 1 else out


def _remove_crossings(d: Diagram, ids: set[str]) -> Diagram:
    rest = [c for c in d.crossings if c.id not in ids]
    joins = []
    for c in d.crossings:
        if c.id in ids:
            joins += [(c.under_in, c.under_out), (c.over_in, c.over_out)]
    return _rebuild(rest, d.edge_color, _hints(d), joins)


def _r2_add(d: Diagram, site: R2Add) -> Diagram:
    nxt = max(d.head, default=0) + 1
    first, second = site.first, site.second
    if first == second:
        return _r2_fold(d, site)
    if first[0] == second[0]:
        raise DiagramError("a finger cannot cross the other side of its own edge")
    hints = _hints(d)
    edge_color = dict(d.edge_color)
    first, li = _loop_to_edge(d, first, nxt)
    if li is not None:
        nxt += 1
    second, lj = _loop_to_edge(d, second, nxt)
    if lj is not None:
        nxt += 1
    for side, li_ in ((first, li), (second, lj)):
        if li_ is not None:
            comp = d.components[li_]
            if not comp.is_free_loop:
                raise DiagramError(f"component {li_} is not a free loop")
            edge_color[side[0]] = comp.color
            hints[li_] = ("edge", side[0])
        elif side[0] not in d.head:
            raise DiagramError(f"unknown edge {side[0]}")
    (e, se), (f, sf) = first, second
    qa, qb = _fresh_id(d, 2)

    def split(edge, is_loop, order):
        """Real-direction pieces of ``edge`` around its two new crossings."""
        nonlocal nxt
        mid, last = nxt, nxt + 1
        nxt += 2
        if is_loop:
            last = edge
            nxt -= 1
        edge_color[mid] = edge_color[last] = edge_color[edge]
        # (crossing, in-edge, out-edge) in real order
        return [(order[0], edge, mid), (order[1], mid, last)], last

    e_pass, e_last = split(e, li is not None, [qb, qa] if se > 0 else [qa, qb])
    f_pass, f_last = split(f, lj is not None, [qa, qb] if sf > 0 else [qb, qa])

    crossings = list(d.crossings)
    if li is None:
        crossings = [_replace_in(c, e, e_last) for c in crossings]
    if lj is None:
        crossings = [_replace_in(c, f, f_last) for c in crossings]

    e_at = {q: (i, o) for q, i, o in e_pass}
    f_at = {q: (i, o) for q, i, o in f_pass}
    for q, dart_sign in ((qb, 1), (qa, -1)):
        sign = dart_sign * se * sf * (1 if site.first_over else -1)
        (ei, eo), (fi, fo) = e_at[q], f_at[q]
        if site.first_over:
            crossings.append(Crossing(q, sign, fi, fo, ei, eo))
        else:
            crossings.append(Crossing(q, sign, ei, eo, fi, fo))
    return _rebuild(crossings, edge_color, hints)


def _r2_fold(d: Diagram, site: R2Add) -> Diagram:
    """Fold an edge over (or under) a later stretch of itself.

    Drawn with the edge running left to right and ``side`` = +1 meaning a
    finger pushed to its left: the finger leaves the edge, runs ahead,
    dips across the edge at B then comes back across at A, and the edge
    then continues through A and B.  New edges in travel order:
    e0 -> B -> e1 -> A -> e2 -> A -> e3 -> B -> e4.
    """
    (e, side), over = site.first, site.first_over
    hints = _hints(d)
    edge_color = dict(d.edge_color)
    nxt = max(d.head, default=0) + 1
    crossings = list(d.crossings)
    if e < 0:
        li = -1 - e
        if not 0 <= li < len(d.components) or not d.components[li].is_free_loop:
            raise DiagramError(f"component {li} is not a free loop")
        e0 = e4 = nxt
        nxt += 1
        edge_color[e0] = d.components[li].color
        hints[li] = ("edge", e0)
    else:
        if e not in d.head:
            raise DiagramError(f"unknown edge {e}")
        e0, e4 = e, nxt + 3
        crossings = [_replace_in(c, e, e4) for c in crossings]
    e1, e2, e3 = nxt, nxt + 1, nxt + 2
    for x in (e1, e2, e3, e4):
        edge_color[x] = edge_color[e0]
    qa, qb = _fresh_id(d, 2)
    sign_b = side * (1 if over else -1)
    if over:
        crossings.append(Crossing(qb, sign_b, e3, e4, e0, e1))
        crossings.append(Crossing(qa, -sign_b, e2, e3, e1, e2))
    else:
        crossings.append(Crossing(qb, sign_b, e0, e1, e3, e4))
        crossings.append(Crossing(qa, -sign_b, e1, e2, e2, e3))
    return _rebuild(crossings, edge_color, hints)


def _r3(d: Diagram, site: R3Site) -> Diagram:
    tri = set(site.crossings)
    if tuple(sorted(tri)) not in _r3_triangles(d):
        raise DiagramError(f"{site.crossings} is not an R3 triangle")
    # the three triangle sides: edges running between two triangle crossings
    middles = []
    for face in faces(d):
        ids = {d.tail[e][0].id for e, _ in face} | {d.head[e][0].id for e, _ in face}
        if len(face) == 3 and ids == tri:
            middles = [e for e, _ in face]
            break
    ports = {cid: dict(zip(("under_in", "under_out", "over_in", "over_out"),
                           d.crossing(cid).ports())) for cid in tri}
    for m in middles:
        t, t_over = d.tail[m]
        h, h_over = d.head[m]
        a = t.over_in if t_over else t.under_in
        b = h.over_out if h_over else h.under_out
        lvl_t = "over" if t_over else "under"
        lvl_h = "over" if h_over else "under"
        # strand now meets the head crossing's partner first
        ports[h.id][f"{lvl_h}_in"], ports[h.id][f"{lvl_h}_out"] = a, m
        ports[t.id][f"{lvl_t}_in"], ports[t.id][f"{lvl_t}_out"] = m, b
    crossings = [Crossing(c.id, c.sign, **ports[c.id]) if c.id in tri else c
                 for c in d.crossings]
    return _rebuild(crossings, d.edge_color, _hints(d))


def reidemeister(d: Diagram, move: str, site: Site) -> Diagram:
    """Apply one Reidemeister move at ``site``; raises DiagramError if it does not apply."""
    if move == "R1+" and isinstance(site, R1Add):
        return _r1_add(d, site)
    if move == "R1-" and isinstance(site, R1Remove):
        if not _r1_remove_ok(d, d.crossing(site.crossing)):
            raise DiagramError(f"no removable curl at {site.crossing!r}")
        return _remove_crossings(d, {site.crossing})
    if move == "R2+" and isinstance(site, R2Add):
        if site not in find_sites(d, "R2+"):
            raise DiagramError("the two sides do not share a face")
        return _r2_add(d, site)
    if move == "R2-" and isinstance(site, R2Remove):
        if tuple(sorted(site.crossings)) not in _r2_remove_pairs(d):
            raise DiagramError(f"{site.crossings} do not bound a removable bigon")
        return _remove_crossings(d, set(site.crossings))
    if move == "R3" and isinstance(site, R3Site):
        return _r3(d, site)
    raise DiagramError(f"site {site!r} does not fit move {move!r}")


def random_move(d: Diagram, rng: random.Random, moves=MOVES) -> tuple[str, Site, Diagram] | None:
    """Pick a random applicable move among ``moves``; None if nothing applies."""
    options = list(moves)
    rng.shuffle(options)
    for move in options:
        sites = find_sites(d, move)
        if sites:
            site = rng.choice(sites)
            return move, site, reidemeister(d, move, site)
    return None
