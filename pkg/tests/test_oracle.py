from __future__ import annotations

import cmath

import pytest

from chroma_skein.diagram import braid_closure, smooth, switch, unlink
from chroma_skein.oracle import format_s, homfly_l, homfly_m, jones, kauffman_bracket, writhe
from chroma_skein.poly import sv_eval, sv_substitute_half
from chroma_skein.skein import evaluate_F

from conftest import figure_eight, hopf, left_trefoil


def test_bracket_examples():
    assert kauffman_bracket(unlink(["a"])) == {0: 1}
    assert kauffman_bracket(braid_closure([1], ["a", "a"])) == {3: -1}
    assert kauffman_bracket(hopf()) == {4: -1, -4: -1}
    assert kauffman_bracket(unlink(["a", "b"])) == {2: -1, -2: -1}


def test_writhe():
    assert writhe(hopf()) == -2
    assert writhe(left_trefoil()) == -3
    assert writhe(unlink(["a"])) == 0


def test_jones_examples():
    assert jones(unlink(["a"])) == {0: 1}
    assert jones(hopf()) == {-1: -1, -5: -1}
    assert format_s(jones(left_trefoil())) == "s^-2 + s^-6 - s^-8"
    assert format_s(jones(figure_eight())) == "s^4 - s^2 + 1 - s^-2 + s^-4"


def test_format_s():
    assert format_s({}) == "0"
    assert format_s({0: 2, 1: -3, -2: 1}) == "-3*s + 2 + s^-2"


@pytest.mark.parametrize("d", [hopf(("a", "a")), left_trefoil(), figure_eight(),
                               braid_closure([1, 1, 1], ["a", "a"])])
def test_skein_engine_agrees(d):
    assert sv_substitute_half(evaluate_F(d)).as_univariate("s") == jones(d)


@pytest.mark.parametrize("word, strands", [([-1, -1], 2), ([-1, -1, -1], 2), ([1, -2, 1, -2], 3)])
def test_homfly_relation_numerically(word, strands):
    # l F(K+) + l^-1 F(K-) + m F(K0) = 0 on a monochrome crossing
    d = braid_closure(word, ["a"] * strands)
    c = d.crossings[0]
    pos, neg = (d, switch(d, c.id)) if c.sign > 0 else (switch(d, c.id), d)
    zero = smooth(d, c.id)
    x0, w0, t0 = 2, 3, 5
    f = lambda k: complex(sv_eval(evaluate_F(k), x0, w0, t0))
    ell, m = homfly_l(w0, t0), homfly_m(t0)
    assert cmath.isclose(ell * f(pos) + f(neg) / ell + m * f(zero), 0, abs_tol=1e-9)
