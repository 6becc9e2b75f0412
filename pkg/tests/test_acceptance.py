"""Acceptance gate: nine criteria, each reported as one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the plain report,
or through pytest, where each criterion is a separate test.
"""

from __future__ import annotations

import random
import sys
import time
from typing import Callable

import pytest

from chroma_skein.diagram import (
    braid_closure,
    connected_sum,
    disjoint_union,
    mirror,
    reverse_all,
    unlink,
)
from chroma_skein.fuzz import random_diagram, run_fuzz
from chroma_skein.moves import find_sites, reidemeister
from chroma_skein.oracle import jones
from chroma_skein.poly import LaurentPoly, SkeinValue, render, sv_invert_wt, sv_substitute_half
from chroma_skein.skein import Evaluator, crossing_family, evaluate_F, unlink_value
from chroma_skein.worked_example import run_checks

INV_W = SkeinValue(LaurentPoly.monomial(0, -1, 0))
W = SkeinValue(LaurentPoly.monomial(0, 1, 0))
INV_T = SkeinValue(LaurentPoly.monomial(0, 0, -1))
INV_WX = SkeinValue(LaurentPoly.monomial(-1, -1, 0))


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def monochrome(d):
    return d.with_colors(["a"] * len(d.components))


def crit_worked_example():
    with Timer() as tm:
        checks = run_checks()
    failed = [c.label for c in checks if not c.passed]
    assert not failed, f"failed: {failed}"
    assert len(checks) == 7
    assert tm.elapsed < 1.0, f"{tm.elapsed:.2f}s"
    return f"7/7 checks, {tm.elapsed:.3f}s"


def crit_unlink_closed_form():
    rng = random.Random(2)
    count = 0
    with Timer() as tm:
        for n in range(1, 7):
            for c in range(1, n + 1):
                base = unlink([f"c{i % c}" for i in range(n)])
                for pairs in range(3):
                    d = base
                    for _ in range(pairs):
                        d = reidemeister(d, "R2+", rng.choice(find_sites(d, "R2+")))
                    assert len(d.crossings) == 2 * pairs
                    assert evaluate_F(d) == unlink_value(n, c), (n, c, pairs)
                    count += 1
    assert tm.elapsed < 5.0, f"{tm.elapsed:.2f}s"
    return f"{count} diagrams, {tm.elapsed:.3f}s"


def crit_fresh_circle():
    rng = random.Random(3)
    for _ in range(10):
        d = random_diagram(rng, 8)
        assert evaluate_F(disjoint_union(d, unlink(["fresh"]))) == evaluate_F(d) * INV_WX
    return "10 diagrams"


def crit_skein_identities():
    rng = random.Random(4)
    sites = 0
    while sites < 100:
        d = random_diagram(rng, 7)
        if not d.crossings:
            continue
        cid = rng.choice(d.crossings).id
        f = crossing_family(d, cid)
        lhs = INV_W * evaluate_F(f.positive) - W * evaluate_F(f.negative)
        rhs = (1 - INV_T) * evaluate_F(f.smoothed) \
            + INV_W * (1 - INV_T) * evaluate_F(f.positive_merged)
        assert lhs == rhs, f"colored skein identity fails at {cid}"
        m = crossing_family(monochrome(d), cid)
        lhs = INV_W * INV_T * evaluate_F(m.positive) - W * evaluate_F(m.negative)
        assert lhs == (1 - INV_T) * evaluate_F(m.smoothed), f"monochrome skein identity fails at {cid}"
        sites += 1
    return f"{sites} sites"


def crit_jones():
    corpus = [
        braid_closure([-1, -1], ["a", "a"]),
        braid_closure([-1, -1, -1], ["a", "a"]),
        braid_closure([1, 1, 1], ["a", "a"]),
        braid_closure([1, -2, 1, -2], ["a"] * 3),
    ]
    rng = random.Random(5)
    while len(corpus) < 9:
        d = random_diagram(rng, 8)
        if d.crossings:
            corpus.append(monochrome(d))
    with Timer() as tm:
        for d in corpus:
            got = sv_substitute_half(evaluate_F(d)).as_univariate("s")
            assert got == jones(d), render(evaluate_F(d))
    assert tm.elapsed < 10.0, f"{tm.elapsed:.2f}s"
    return f"{len(corpus)} diagrams, {tm.elapsed:.3f}s"


def crit_fuzz():
    with Timer() as tm:
        report = run_fuzz(max_crossings=8, cases=200, seed=42)
    assert report.ok, report.render()
    assert tm.elapsed < 60.0, f"{tm.elapsed:.2f}s"
    return f"{report.summary()} ({report.checks} comparisons), {tm.elapsed:.2f}s"


def crit_properties():
    rng = random.Random(7)
    for _ in range(5):
        d1, d2 = random_diagram(rng, 5), random_diagram(rng, 5)
        i, j = rng.randrange(len(d1.components)), rng.randrange(len(d2.components))
        assert evaluate_F(connected_sum(d1, i, d2, j)) == evaluate_F(d1) * evaluate_F(d2)
    for _ in range(20):
        d = random_diagram(rng, 8)
        assert evaluate_F(reverse_all(d)) == evaluate_F(d)
    for _ in range(10):
        d = monochrome(random_diagram(rng, 8))
        assert evaluate_F(mirror(d)) == sv_invert_wt(evaluate_F(d))
    return "5 sums, 20 reversals, 10 mirrors"


def crit_discrimination():
    same = evaluate_F(braid_closure([-1, -1], ["a", "a"]))
    two = evaluate_F(braid_closure([-1, -1], ["a", "b"]))
    assert render(same) == "(w^2*t^2 - w^2*t + w^2 - 1) / ((1-t)*w^3*t)"
    assert render(two) == "(w^2*x + t - x) / (w^3*x*t)"
    assert same != two
    return "two distinct values"


def crit_performance():
    d = braid_closure([1, 1, 2, 2, 1, 1, 2, 2, -1, -1], ["a"] * 3).with_colors(["a", "b", "c"])
    assert (len(d.crossings), len(d.components), len(d.color_set)) == (10, 3, 3)
    ev = Evaluator(memoize=True)
    with Timer() as tm:
        value = ev(d)
    assert value.is_normalized()
    assert tm.elapsed < 10.0, f"{tm.elapsed:.2f}s"
    return f"{tm.elapsed:.3f}s, {ev.calls} calls, {ev.hits} memo hits"


CRITERIA: list[tuple[str, Callable[[], str]]] = [
    ("1 worked example", crit_worked_example),
    ("2 unlink closed form", crit_unlink_closed_form),
    ("3 fresh-color circle", crit_fresh_circle),
    ("4 skein identities", crit_skein_identities),
    ("5 Jones specialization", crit_jones),
    ("6 invariance fuzz", crit_fuzz),
    ("7 sum/reverse/mirror", crit_properties),
    ("8 coloration discrimination", crit_discrimination),
    ("9 performance", crit_performance),
]


def evaluate(name: str, fn: Callable[[], str]) -> tuple[bool, str]:
    try:
        detail = fn()
    except AssertionError as exc:
        return False, f"FAIL [{name}] {exc}"
    return True, f"PASS [{name}] {detail}"


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, line = evaluate(name, fn)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n, f) for n, f in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
