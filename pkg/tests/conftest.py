from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import assume, settings, strategies as st

from chroma_skein import LaurentPoly, SkeinValue, braid_closure

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def data_dir() -> Path:
    return DATA


def hopf(colors=("a", "b")):
    return braid_closure([-1, -1], list(colors))


def left_trefoil():
    return braid_closure([-1, -1, -1], ["a", "a"])


def figure_eight():
    return braid_closure([1, -2, 1, -2], ["a"] * 3)


@st.composite
def braid_words(draw, max_crossings=6, max_strands=4):
    strands = draw(st.integers(1, max_strands))
    if strands == 1:
        return strands, []
    gen = st.integers(1, strands - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    return strands, draw(st.lists(gen, max_size=max_crossings))


@st.composite
def colored_diagrams(draw, max_crossings=6, max_components=3, max_colors=3, monochrome=False):
    strands, word = draw(braid_words(max_crossings))
    d = braid_closure(word, ["a"] * strands)
    n = len(d.components)
    assume(n <= max_components)
    if monochrome:
        return d
    colors = draw(st.lists(st.integers(0, max_colors - 1), min_size=n, max_size=n))
    return d.with_colors([f"k{c}" for c in colors])


small_terms = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
    st.integers(-3, 3).filter(bool),
    max_size=8,
)
laurent_polys = small_terms.map(LaurentPoly)
skein_values = st.tuples(laurent_polys, st.integers(0, 2)).map(lambda p: SkeinValue(*p).normalized())
