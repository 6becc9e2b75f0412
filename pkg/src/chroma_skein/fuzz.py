"""Randomized invariance campaign.

Each case draws a colored braid closure, applies one random Reidemeister
move, then compares the statistic on every component order (with random
base points) and under a random renaming of the colors.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable

from .diagram import Diagram, braid_closure, dump_diagram
from .moves import random_move
from .poly import SkeinValue
from .skein import Evaluator

__all__ = ["DEFAULT_SEED", "random_diagram", "variants", "FuzzReport", "run_fuzz"]

DEFAULT_SEED = 20240607
MAX_COMPONENTS = 3
MAX_COLORS = 3


def random_diagram(rng: random.Random, max_crossings: int) -> Diagram:
    """Closure of a random braid word, at most ``max_crossings`` long, at most three components."""
    while True:
        strands = rng.randint(1, 4)
        length = rng.randint(0, max_crossings) if strands > 1 else 0
        word = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
        d = braid_closure(word, ["a"] * strands)
        n = len(d.components)
        if n > MAX_COMPONENTS:
            continue
        palette = rng.randint(1, MAX_COLORS)
        return d.with_colors([f"c{rng.randrange(palette)}" for _ in range(n)])


def _rebase(d: Diagram, rng: random.Random) -> Diagram:
    for i, comp in enumerate(d.components):
        if comp.edges:
            d = d.with_base_point(i, rng.choice(comp.edges))
    return d


def variants(d: Diagram, rng: random.Random) -> list[tuple[str, Diagram]]:
    """Transformed copies of ``d`` that must share its value."""
    out = []
    moved = random_move(d, rng)
    if moved is not None:
        move, _, d2 = moved
        out.append((move, d2))
    for perm in itertools.permutations(range(len(d.components))):
        out.append((f"order {perm} + base points", _rebase(d.with_order(perm), rng)))
    names = sorted(d.color_set)
    fresh = [f"k{i}" for i in range(len(names))]
    rng.shuffle(fresh)
    mapping = dict(zip(names, fresh))
    out.append(("color bijection", d.recolored(mapping.__getitem__)))
    return out


@dataclass
class FuzzReport:
    cases: int
    passed: int = 0
    checks: int = 0
    counterexample: dict | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    def summary(self) -> str:
        return f"{self.passed}/{self.cases} invariance checks passed"

    def render(self) -> str:
        lines = [self.summary()]
        lines += self.failures
        if self.counterexample is not None:
            lines.append(json.dumps(self.counterexample, sort_keys=True))
        return "\n".join(lines)


def run_fuzz(max_crossings: int = 8, cases: int = 200, seed: int = DEFAULT_SEED,
             statistic: Callable[[Diagram], SkeinValue] | None = None) -> FuzzReport:
    """Run ``cases`` independent cases; the first failing case is kept as a counterexample."""
    rng = random.Random(seed)
    stat = statistic or Evaluator()
    report = FuzzReport(cases)
    for case in range(cases):
        d = random_diagram(rng, max_crossings)
        ref = stat(d)
        bad = None
        for label, v in variants(d, rng):
            report.checks += 1
            if stat(v) != ref:
                bad = (label, v)
                break
        if bad is None:
            report.passed += 1
            continue
        report.failures.append(f"case {case}: value changed under {bad[0]}")
        if report.counterexample is None:
            report.counterexample = {"case": case, "transform": bad[0],
                                     "before": dump_diagram(d), "after": dump_diagram(bad[1])}
    return report
