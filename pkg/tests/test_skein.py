from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from chroma_skein.diagram import (
    braid_closure,
    connected_sum,
    disjoint_union,
    merge_colors,
    mirror,
    parse_diagram,
    reverse_all,
    switch,
    unlink,
)
from chroma_skein.moves import random_move
from chroma_skein.poly import LaurentPoly, SkeinValue, make_y, render, sv_invert_wt
from chroma_skein.skein import (
    Evaluator,
    all_colorations_F,
    ascending,
    ascending_merged,
    crossing_family,
    deciding_plan,
    evaluate_F,
    memo_key,
    partition_label,
    unlink_value,
)

from conftest import colored_diagrams, hopf, left_trefoil

W = LaurentPoly.monomial(0, 1, 0)
T = LaurentPoly.monomial(0, 0, 1)
INV_W = SkeinValue(LaurentPoly.monomial(0, -1, 0))
INV_T = SkeinValue(LaurentPoly.monomial(0, 0, -1))
ONE_MINUS_INV_T = 1 - INV_T
INV_WX = SkeinValue(LaurentPoly.monomial(-1, -1, 0))

HOPF_SAME = "(w^2*t^2 - w^2*t + w^2 - 1) / ((1-t)*w^3*t)"
HOPF_TWO = "(w^2*x + t - x) / (w^3*x*t)"


def test_plan_on_hopf():
    d = hopf()
    plan = deciding_plan(d)
    assert [(s.crossing, s.sign, s.same_color) for s in plan] == [("c2", -1, False)]
    assert deciding_plan(switch(d, "c2")) == []
    assert deciding_plan(unlink(["a", "b"])) == []


def test_ascending_diagrams_have_empty_plans():
    d = braid_closure([1, -2, 1, -2, -2], ["a"] * 3).with_colors(["a", "b"])
    assert deciding_plan(ascending(d)) == []
    assert evaluate_F(ascending(d)) == unlink_value(2, 2)
    assert evaluate_F(ascending_merged(d)) == unlink_value(2, 1)


def test_unlink_values():
    assert unlink_value(1, 1) == SkeinValue(1)
    assert unlink_value(3, 3) == INV_WX * INV_WX
    assert unlink_value(2, 1) == make_y() * INV_WX
    with pytest.raises(ValueError):
        unlink_value(2, 3)
    with pytest.raises(ValueError):
        unlink_value(0, 0)


@pytest.mark.parametrize("d, text", [
    (hopf(("a", "a")), HOPF_SAME),
    (hopf(("a", "b")), HOPF_TWO),
    (left_trefoil(), "(w^2*t^2 + w^2 - 1) / (w^4*t^2)"),
    (unlink(["a"]), "1"),
    (braid_closure([1], ["a", "a"]), "1"),
    (braid_closure([-1], ["a", "a"]), "1"),
])
def test_known_values(d, text):
    assert render(evaluate_F(d)) == text


def test_disjoint_fresh_circle_divides_by_wx():
    d = left_trefoil()
    assert evaluate_F(disjoint_union(d, unlink(["z"]))) == evaluate_F(d) * INV_WX


def test_colorations_hopf_and_unlink():
    rows = {partition_label(p): render(v) for p, v in all_colorations_F(hopf()).items()}
    assert rows == {"{1}{2}": HOPF_TWO, "{1 2}": HOPF_SAME}
    rows = {partition_label(p): v for p, v in all_colorations_F(unlink(["a", "a"])).items()}
    assert rows == {"{1}{2}": INV_WX, "{1 2}": make_y() * INV_WX}
    assert len(all_colorations_F(unlink(["a"]))) == 1


def test_memo_key():
    d = hopf(("p", "q"))
    assert memo_key(d) == memo_key(d)
    assert memo_key(hopf(("a", "a"))) != memo_key(hopf(("a", "b")))
    assert memo_key(hopf(("p", "q"))) == memo_key(hopf(("u", "v")))


def test_memoization_does_not_change_values():
    d = braid_closure([1, 1, 2, 2, 1, 1, 2, 2, -1, -1], ["a"] * 3).with_colors(["a", "b", "c"])
    ev = Evaluator()
    assert ev(d) == evaluate_F(d, memoize=False)
    assert ev.hits > 0


def _colored_identity(fam):
    lhs = INV_W * evaluate_F(fam.positive) - SkeinValue(W) * evaluate_F(fam.negative)
    rhs = ONE_MINUS_INV_T * evaluate_F(fam.smoothed) \
        + INV_W * ONE_MINUS_INV_T * evaluate_F(fam.positive_merged)
    return lhs == rhs


def _monochrome_identity(fam):
    lhs = INV_W * INV_T * evaluate_F(fam.positive) - SkeinValue(W) * evaluate_F(fam.negative)
    return lhs == ONE_MINUS_INV_T * evaluate_F(fam.smoothed)


@given(colored_diagrams(max_crossings=6), st.data())
def test_colored_identity(d, data):
    if not d.crossings:
        return
    cid = data.draw(st.sampled_from([c.id for c in d.crossings]))
    assert _colored_identity(crossing_family(d, cid))


@given(colored_diagrams(max_crossings=6, monochrome=True), st.data())
def test_monochrome_identity(d, data):
    if not d.crossings:
        return
    cid = data.draw(st.sampled_from([c.id for c in d.crossings]))
    assert _monochrome_identity(crossing_family(d, cid))


@given(colored_diagrams(max_crossings=6), st.data())
def test_order_and_base_point_independence(d, data):
    ref = evaluate_F(d)
    for perm in itertools.permutations(range(len(d.components))):
        e = d.with_order(perm)
        for i, comp in enumerate(e.components):
            if comp.edges:
                e = e.with_base_point(i, data.draw(st.sampled_from(comp.edges)))
        assert evaluate_F(e) == ref


@given(colored_diagrams(max_crossings=6), st.randoms(use_true_random=False))
def test_reidemeister_invariance(d, rng):
    ref = evaluate_F(d)
    for _ in range(2):
        d = random_move(d, rng)[2]
        assert evaluate_F(d) == ref


@given(colored_diagrams(max_crossings=6), st.permutations(["p", "q", "r"]))
def test_color_bijection_invariance(d, names):
    mapping = dict(zip(sorted(d.color_set), names))
    assert evaluate_F(d.recolored(mapping.__getitem__)) == evaluate_F(d)


@given(colored_diagrams(max_crossings=5, max_components=2),
       colored_diagrams(max_crossings=5, max_components=2), st.data())
def test_connected_sum_multiplicative(d1, d2, data):
    i = data.draw(st.integers(0, len(d1.components) - 1))
    j = data.draw(st.integers(0, len(d2.components) - 1))
    assert evaluate_F(connected_sum(d1, i, d2, j)) == evaluate_F(d1) * evaluate_F(d2)


@given(colored_diagrams(max_crossings=6))
def test_reverse_invariance(d):
    assert evaluate_F(reverse_all(d)) == evaluate_F(d)


@given(colored_diagrams(max_crossings=6, monochrome=True))
def test_mirror_inverts_w_and_t(d):
    assert evaluate_F(mirror(d)) == sv_invert_wt(evaluate_F(d))


@given(colored_diagrams(max_crossings=6))
def test_values_are_normalized(d):
    v = evaluate_F(d)
    assert v.is_normalized()
    for cid in (c.id for c in d.crossings):
        a, b = d.strand_colors(cid)
        assert evaluate_F(merge_colors(d, a, b)).is_normalized()


def test_parsed_document_matches_braid():
    doc = {
        "crossings": [
            {"id": "c1", "sign": -1, "under_in": 1, "under_out": 2, "over_in": 3, "over_out": 4},
            {"id": "c2", "sign": -1, "under_in": 4, "under_out": 3, "over_in": 2, "over_out": 1},
        ],
        "colors": ["a", "b"],
    }
    assert evaluate_F(parse_diagram(doc)) == evaluate_F(hopf(("a", "b")))
