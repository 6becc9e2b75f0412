"""A two-component worked example, checked step by step.

``K`` is a Whitehead link diagram (closure of the 3-braid
s1 s2^-1 s1 s2^-1 s2^-1) with its two components colored differently.
Component ``a`` is traversed first from edge 1, ``b`` from edge 7.  The
walk meets exactly two crossings on the over strand first: ``I``
(positive) then ``II`` (negative), both between the two components.

Expanding at ``I`` and then at ``II`` gives the eight intermediate
diagrams

=====  ===========================================
K1     switch K at I
K2     K1 with colors merged
K3     smooth K at I
K4     switch K1 at II  (the ascending diagram)
K5     switch K2 at II  (ascending, colors merged)
K6     smooth K1 at II
K7     switch K3 at II
K8     smooth K3 at II
=====  ===========================================

and every value is compared with a closed form written out by hand
below, independent of the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagram import Diagram, merge_colors, parse_diagram, smooth, switch
from .poly import LaurentPoly, SkeinValue, make_y, render
from .skein import evaluate_F

__all__ = ["EXAMPLE_DIAGRAM", "example_diagram", "Check", "intermediate_diagrams",
           "expected_values", "run_checks"]

EXAMPLE_DIAGRAM = {
    "crossings": [
        {"id": "I", "sign": 1, "under_in": 7, "under_out": 8, "over_in": 1, "over_out": 2},
        {"id": "c2", "sign": -1, "under_in": 2, "under_out": 3, "over_in": 5, "over_out": 6},
        {"id": "c3", "sign": 1, "under_in": 6, "under_out": 1, "over_in": 8, "over_out": 9},
        {"id": "II", "sign": -1, "under_in": 9, "under_out": 10, "over_in": 3, "over_out": 4},
        {"id": "c5", "sign": -1, "under_in": 4, "under_out": 5, "over_in": 10, "over_out": 7},
    ],
    "colors": ["a", "b"],
    "base_points": [1, 7],
}


def example_diagram() -> Diagram:
    return parse_diagram(EXAMPLE_DIAGRAM)


def intermediate_diagrams(k: Diagram, *, sign_bug: bool = False) -> dict[str, Diagram]:
    """K and K1..K8.

    ``sign_bug`` corrupts the recorded sign of ``II`` inside K2 only; it
    exists so the checker can be shown to fail.
    """
    k1 = switch(k, "I")
    k2 = merge_colors(k1, "a", "b")
    k3 = smooth(k, "I")
    out = {
        "K": k, "K1": k1, "K2": k2, "K3": k3,
        "K4": switch(k1, "II"), "K5": switch(k2, "II"), "K6": smooth(k1, "II"),
        "K7": switch(k3, "II"), "K8": smooth(k3, "II"),
    }
    if sign_bug:
        bad = tuple(replace(c, sign=-c.sign) if c.id == "II" else c for c in k2.crossings)
        out["K2"] = Diagram(bad, k2.components)
    return out


def _poly(*terms: tuple[int, int, int, int]) -> LaurentPoly:
    """Sum of c * x^a w^b t^e over (a, b, e, c)."""
    out = LaurentPoly()
    for a, b, e, c in terms:
        out = out + LaurentPoly.monomial(a, b, e, coeff=c)
    return out


def expected_values() -> dict[str, SkeinValue]:
    y = make_y()
    inv_wx = SkeinValue(LaurentPoly.monomial(-1, -1, 0))
    hopf_same = SkeinValue(_poly((0, 2, 2, 1), (0, 2, 1, -1), (0, 2, 0, 1), (0, 0, 0, -1))
                           .shift((0, -3, -1)), 1)
    return {
        "K1": SkeinValue(_poly((1, 2, 0, 1), (0, 0, 1, 1), (1, 0, 0, -1)).shift((-1, -3, -1))),
        "K2": hopf_same,
        "K8": hopf_same,
        "K3": SkeinValue(_poly((0, 2, 2, 1), (0, 2, 0, 1), (0, 0, 0, -1)).shift((0, -4, -2))),
        "K4": inv_wx,
        "K5": y * inv_wx,
        "K6": SkeinValue(1),
        "K7": SkeinValue(1),
        "K": SkeinValue(_poly(
            (1, 4, 2, 1), (1, 4, 3, -1),
            (0, 2, 2, 1), (1, 2, 1, 1), (1, 2, 0, -1), (1, 2, 2, -1), (1, 2, 3, 1),
            (1, 0, 0, 1), (1, 0, 1, -1),
        ).shift((-1, -3, -2))),
    }


@dataclass(frozen=True)
class Check:
    label: str
    names: tuple[str, ...]
    expected: SkeinValue
    got: dict[str, SkeinValue]

    @property
    def passed(self) -> bool:
        return all(v == self.expected for v in self.got.values())

    def report(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.label} = {render(self.expected)}"
        if self.passed:
            return head
        lines = [head]
        for name, v in self.got.items():
            if v != self.expected:
                lines.append(f"  {name}: expected {render(self.expected)}")
                lines.append(f"  {name}: got      {render(v)}")
        return "\n".join(lines)


_GROUPS = (
    ("F(K1)", ("K1",)),
    ("F(K2) = F(K8)", ("K2", "K8")),
    ("F(K3)", ("K3",)),
    ("F(K4)", ("K4",)),
    ("F(K5)", ("K5",)),
    ("F(K6) = F(K7)", ("K6", "K7")),
    ("F(K)", ("K",)),
)


def run_checks(*, sign_bug: bool = False) -> list[Check]:
    diagrams = intermediate_diagrams(example_diagram(), sign_bug=sign_bug)
    expected = expected_values()
    cache: dict = {}
    checks = []
    for label, names in _GROUPS:
        got = {n: evaluate_F(diagrams[n], cache=cache) for n in names}
        checks.append(Check(label, names, expected[names[0]], got))
    return checks
