"""The poset of monomial ideals with a fixed Hilbert function.

M' >= M when, for every monomial w, M' has at least as many standard
monomials of degree deg(w) that are lex-smaller than or equal to w as M has.
Within one degree both counts are step functions of w that jump only at
standard monomials, and the inequality can first fail only where the count
for M jumps.  So it is enough to test w ranging over the standard monomials
of M, which keeps the check finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import edge
from .arrows import Arrow, positive_significant
from .errors import HilbertFunctionMismatch, NotAHilbertFunction, VerificationFailed
from .grading import Grading
from .staircase import (
    HilbertFunction,
    MonomialIdeal,
    from_partition,
    hilbert_function,
    lex_count,
    lex_sorted_by_degree,
)


def partitions(n: int, largest: int | None = None):
    """Partitions of n as weakly decreasing lists."""
    if n == 0:
        yield []
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield [first, *rest]


def enumerate_ideals(h: HilbertFunction, g: Grading) -> list[MonomialIdeal]:
    """All monomial ideals with Hilbert function h, sorted by generator list."""
    out = []
    for parts in partitions(h.total):
        M = from_partition(parts)
        if hilbert_function(M, g) == h:
            out.append(M)
    out.sort(key=lambda M: M.gens)
    return out


def order_geq(M1: MonomialIdeal, M: MonomialIdeal, g: Grading, check: bool = True) -> bool:
    """True iff M1 >= M in the poset order."""
    if check and hilbert_function(M1, g) != hilbert_function(M, g):
        raise HilbertFunctionMismatch(f"{M1} and {M} have different Hilbert functions")
    groups1 = lex_sorted_by_degree(M1, g)
    for d, group in lex_sorted_by_degree(M, g).items():
        other = groups1.get(d, [])
        for count, w in enumerate(group, start=1):
            if lex_count(other, w) < count:
                return False
    return True


def order_gt(M1: MonomialIdeal, M: MonomialIdeal, g: Grading) -> bool:
    return M1 != M and order_geq(M1, M, g)


@dataclass(frozen=True)
class Poset:
    grading: Grading
    h: HilbertFunction
    elements: tuple[MonomialIdeal, ...]

    @cached_property
    def relations(self) -> tuple[tuple[bool, ...], ...]:
        """relations[a][b] is True iff elements[a] >= elements[b]."""
        return tuple(tuple(order_geq(A, B, self.grading, check=False) for B in self.elements)
                     for A in self.elements)

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (lower, upper) as indices into ``elements``."""
        R = self.relations
        n = len(self.elements)
        gt = [[R[a][b] and a != b for b in range(n)] for a in range(n)]
        covers = []
        for a in range(n):
            for b in range(n):
                if gt[a][b] and not any(gt[a][c] and gt[c][b] for c in range(n)):
                    covers.append((b, a))
        return tuple(sorted(covers))

    def maximal_elements(self) -> list[MonomialIdeal]:
        R = self.relations
        n = len(self.elements)
        return [self.elements[a] for a in range(n)
                if not any(R[b][a] and b != a for b in range(n))]

    def to_json(self) -> dict:
        return {
            "grading": self.grading.to_json(),
            "hilbert": self.h.to_json(),
            "elements": [M.to_json() for M in self.elements],
            "hasse": [list(e) for e in self.hasse_edges],
        }


def build_poset(h: HilbertFunction, g: Grading) -> Poset:
    return Poset(g, h, tuple(enumerate_ideals(h, g)))


def hasse(P: Poset) -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    """Cover pairs (lower, upper) of the poset."""
    return [(P.elements[a], P.elements[b]) for a, b in P.hasse_edges]


def to_dot(P: Poset, name: str = "poset") -> str:
    """Graphviz source: one node per ideal, edges point from lower to upper."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for idx, M in enumerate(P.elements):
        label = ", ".join(_dot_monomial(p, q) for p, q in M.gens)
        lines.append(f'  n{idx} [label="{label}"];')
    for a, b in P.hasse_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_monomial(p: int, q: int) -> str:
    parts = [f"x^{p}" if p > 1 else "x" if p else "", f"y^{q}" if q > 1 else "y" if q else ""]
    return " ".join(s for s in parts if s) or "1"


def lex_most(h: HilbertFunction, g: Grading, verify: bool = True) -> MonomialIdeal:
    """The unique maximum of the poset; cross-checked against the unique ideal with no positive significant arrows."""
    P = build_poset(h, g)
    if not P.elements:
        raise NotAHilbertFunction("no monomial ideal has this Hilbert function")
    return lex_most_of(P, verify)


def lex_most_of(P: Poset, verify: bool = True) -> MonomialIdeal:
    maxima = P.maximal_elements()
    if len(maxima) != 1:
        raise VerificationFailed(f"poset has {len(maxima)} maximal elements")
    top = maxima[0]
    if verify:
        empty = [M for M in P.elements if not positive_significant(M, P.grading)]
        if empty != [top]:
            raise VerificationFailed(
                f"maximum {top} disagrees with ideals lacking positive arrows {list(map(str, empty))}")
    return top


@dataclass(frozen=True)
class ChainStep:
    source: MonomialIdeal
    alpha: Arrow
    target: MonomialIdeal

    def to_json(self) -> dict:
        return {"from": self.source.to_json(), "alpha": list(self.alpha.key),
                "to": self.target.to_json()}


def chain_step(M: MonomialIdeal, alpha: Arrow) -> MonomialIdeal:
    """Lex initial ideal of the edge ideal of alpha at t = 1."""
    return edge.initial_ideal(edge.edge_ideal(M, alpha, 1), "lex")


def chain_to_lexmost(M: MonomialIdeal, g: Grading, max_steps: int = 10_000) -> list[ChainStep]:
    """Walk up the poset along edge degenerations, always taking the smallest positive arrow."""
    steps = []
    while True:
        arrows = positive_significant(M, g)
        if not arrows:
            return steps
        alpha = arrows[0]
        target = chain_step(M, alpha)
        if not order_gt(target, M, g):
            raise VerificationFailed(f"step {M} -> {target} along {alpha.key} does not go up")
        steps.append(ChainStep(M, alpha, target))
        M = target
        if len(steps) > max_steps:
            raise VerificationFailed("chain did not terminate")
