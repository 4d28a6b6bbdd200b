"""Arrows of a monomial ideal and their classification.

An arrow (i, u, v) joins the minimal generator x^{p_i} y^{q_i} to a standard
monomial x^u y^v of the same degree.  Because the head is standard, exactly
one of u >= p_i (nonnegative), v >= q_i (nonpositive) or u < p_i and
v < q_i (utterly insignificant) holds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .grading import Grading
from .staircase import MonomialIdeal


class ArrowClass(str, Enum):
    POSITIVE = "positive_significant"
    NONNEG = "nonneg_significant_not_positive"
    NONPOS = "nonpos_significant"
    INSIGNIFICANT = "insignificant"
    UTTERLY = "utterly_insignificant"


@dataclass(frozen=True, order=True)
class Arrow:
    i: int
    u: int
    v: int
    cls: ArrowClass = ArrowClass.INSIGNIFICANT

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.i, self.u, self.v)

    @property
    def significant(self) -> bool:
        return self.cls in (ArrowClass.POSITIVE, ArrowClass.NONNEG, ArrowClass.NONPOS)

    def to_json(self) -> dict:
        return {"i": self.i, "u": self.u, "v": self.v, "class": self.cls.value}


def classify(M: MonomialIdeal, i: int, u: int, v: int) -> ArrowClass:
    p, q = M.gens[i]
    if u >= p:
        if i > 0 and M.contains(u + M.p(i - 1) - p, v):
            return ArrowClass.POSITIVE if u > p else ArrowClass.NONNEG
        return ArrowClass.INSIGNIFICANT
    if v >= q:
        if i < M.n and M.contains(u, v - q + M.q(i + 1)):
            return ArrowClass.NONPOS
        return ArrowClass.INSIGNIFICANT
    return ArrowClass.UTTERLY


def all_arrows(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    """Every arrow of M with its class, sorted by (i, u, v)."""
    std = M.standard_monomials
    out = []
    for i, (p, q) in enumerate(M.gens):
        d = g.degree_of(p, q)
        for u, v in std:
            if g.degree_of(u, v) == d:
                out.append(Arrow(i, u, v, classify(M, i, u, v)))
    out.sort()
    return out


def positive_significant(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    return [a for a in all_arrows(M, g) if a.cls is ArrowClass.POSITIVE]


def nonnegative_significant(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    return [a for a in all_arrows(M, g) if a.cls in (ArrowClass.POSITIVE, ArrowClass.NONNEG)]


def nonpositive_significant(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    return [a for a in all_arrows(M, g) if a.cls is ArrowClass.NONPOS]


def significant(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    return [a for a in all_arrows(M, g) if a.significant]


def insignificant(M: MonomialIdeal, g: Grading) -> list[Arrow]:
    return [a for a in all_arrows(M, g) if not a.significant]


def find_arrow(M: MonomialIdeal, g: Grading, i: int, u: int, v: int) -> Arrow | None:
    """The classified arrow (i, u, v) of M, or None if the triple is not an arrow."""
    if not 0 <= i <= M.n or (u, v) not in M.standard_set:
        return None
    if g.degree_of(u, v) != g.degree_of(*M.gens[i]):
        return None
    return Arrow(i, u, v, classify(M, i, u, v))


def arrows_json(arrows: list[Arrow]) -> dict:
    counts = Counter(a.cls.value for a in arrows)
    return {
        "arrows": [a.to_json() for a in arrows],
        "counts": {
            "total": len(arrows),
            "significant": sum(a.significant for a in arrows),
            **{c.value: counts.get(c.value, 0) for c in ArrowClass},
        },
    }
