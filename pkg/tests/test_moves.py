from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from chroma_skein.diagram import braid_closure, unlink
from chroma_skein.moves import MOVES, faces, find_sites, is_planar, random_move, reidemeister
from chroma_skein.oracle import jones

from conftest import colored_diagrams, figure_eight, hopf

CROSSING_DELTA = {"R1+": 1, "R1-": -1, "R2+": 2, "R2-": -2, "R3": 0}


def test_hopf_faces():
    fs = faces(hopf())
    assert len(fs) == 4 and sorted(len(f) for f in fs) == [2, 2, 2, 2]


def test_r1_add_on_every_edge():
    d = hopf()
    sites = find_sites(d, "R1+")
    assert {s.edge for s in sites} == set(d.edges)
    for s in sites:
        e = reidemeister(d, "R1+", s)
        assert len(e.crossings) == 3 and len(e.components) == 2


def test_r1_on_free_loop():
    d = unlink(["a"])
    (site, *_) = find_sites(d, "R1+")
    e = reidemeister(d, "R1+", site)
    assert len(e.crossings) == 1 and not e.free_loops
    back = reidemeister(e, "R1-", find_sites(e, "R1-")[0])
    assert not back.crossings and len(back.components) == 1


def test_r2_add_then_remove_restores():
    d = hopf(("a", "b"))
    for site in find_sites(d, "R2+"):
        e = reidemeister(d, "R2+", site)
        assert len(e.crossings) == 4
        assert any(reidemeister(e, "R2-", r) == d for r in find_sites(e, "R2-"))


def test_r2_between_free_loops():
    d = unlink(["a", "b"])
    sites = find_sites(d, "R2+")
    assert sites
    e = reidemeister(d, "R2+", sites[0])
    assert len(e.crossings) == 2 and is_planar(e)


def test_r3_on_braid_relation():
    d = braid_closure([1, 2, 1], ["a"] * 3)
    (site,) = find_sites(d, "R3")
    e = reidemeister(d, "R3", site)
    assert len(e.crossings) == 3 and e != d
    assert jones(e) == jones(d)
    assert find_sites(figure_eight(), "R3") == []


def test_inapplicable_site_rejected():
    d = hopf()
    with pytest.raises(ValueError):
        reidemeister(d, "R3", find_sites(d, "R1+")[0])


@given(colored_diagrams(max_crossings=7), st.integers(0, 2**32 - 1))
def test_random_moves_preserve_validity_and_jones(d, seed):
    rng = random.Random(seed)
    ref = jones(d)
    for _ in range(3):
        move, _, e = random_move(d, rng)
        e.validate()
        assert is_planar(e)
        assert len(e.crossings) - len(d.crossings) == CROSSING_DELTA[move]
        assert len(e.components) == len(d.components)
        assert sorted(c.color for c in e.components) == sorted(c.color for c in d.components)
        d = e
    assert jones(d) == ref


@pytest.mark.parametrize("move", MOVES)
def test_every_move_type_occurs_on_corpus(move):
    rng = random.Random(7)
    words = [[1, 2, 1, -2], [1, 1, 2, -1, 2], [-1, 2, -1, 2], [1, 2, 1], [1, -1]]
    found = False
    for w in words:
        d = braid_closure(w, ["a"] * 3)
        for _ in range(3):
            if find_sites(d, move):
                found = True
            d = random_move(d, rng)[2]
    assert found
