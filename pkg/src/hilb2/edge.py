"""Edge ideals attached to positive significant arrows.

For alpha = (k, l + p_k, m + q_k) the edge ideal keeps the generators with
index below k and replaces each later generator x^{p_i} y^{q_i} by the
binomial x^{p_i} y^{q_i} - t x^{l + p_i} y^{m + q_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groebner
from .arrows import Arrow, ArrowClass, classify
from .errors import NotPositiveSignificant
from .poly import Poly
from .staircase import MonomialIdeal, monomial_str


@dataclass(frozen=True)
class Binomial:
    """lead + coeff * tail; ``tail`` is None for a pure monomial."""

    lead: tuple[int, int]
    tail: tuple[int, int] | None = None
    coeff: Fraction = Fraction(0)

    def to_poly(self) -> Poly:
        terms = [(self.lead, 1)]
        if self.tail is not None:
            terms.append((self.tail, self.coeff))
        return Poly(terms, 2)

    def to_json(self) -> dict:
        return {"lead": list(self.lead),
                "tail": list(self.tail) if self.tail is not None else None,
                "coeff": str(Fraction(self.coeff))}


def _check_alpha(M: MonomialIdeal, alpha: Arrow | tuple) -> Arrow:
    i, u, v = alpha.key if isinstance(alpha, Arrow) else alpha
    if not M.is_finite_colength or not 0 <= i <= M.n or (u, v) in M or u < 0 or v < 0:
        raise NotPositiveSignificant(f"{(i, u, v)} is not an arrow head position for {M}")
    cls = classify(M, i, u, v)
    if cls is not ArrowClass.POSITIVE:
        raise NotPositiveSignificant(f"{(i, u, v)} is {cls.value} for {M}")
    return Arrow(i, u, v, cls)


@dataclass(frozen=True)
class EdgeIdeal:
    base: MonomialIdeal
    alpha: Arrow
    t: Fraction

    @property
    def k(self) -> int:
        return self.alpha.i

    @property
    def ell(self) -> int:
        return self.alpha.u - self.base.p(self.k)

    @property
    def m(self) -> int:
        return self.alpha.v - self.base.q(self.k)

    @property
    def sigma(self) -> int:
        return sigma_index(self.base, self.alpha)

    def binomials(self) -> list[Binomial]:
        out = []
        for i, (p, q) in enumerate(self.base.gens):
            if i < self.k:
                out.append(Binomial((p, q)))
            else:
                out.append(Binomial((p, q), (p + self.ell, q + self.m), -self.t))
        return out

    def generators(self) -> list[Poly]:
        return [b.to_poly() for b in self.binomials()]

    def generators_symbolic(self) -> list[Poly]:
        """Generators in Q[x, y, t] with t kept as the third variable."""
        out = []
        for i, (p, q) in enumerate(self.base.gens):
            f = Poly.monomial((p, q, 0))
            if i >= self.k:
                f = f - Poly.monomial((p + self.ell, q + self.m, 1))
            out.append(f)
        return out

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "alpha": list(self.alpha.key),
                "t": str(self.t), "generators": [b.to_json() for b in self.binomials()]}


def edge_ideal(M: MonomialIdeal, alpha: Arrow | tuple, t=1) -> EdgeIdeal:
    return EdgeIdeal(M, _check_alpha(M, alpha), Fraction(t))


def sigma_index(M: MonomialIdeal, alpha: Arrow | tuple) -> int:
    """Largest sigma < k whose generator divides x^{l + p_{k-1}} y^{m + q_k}."""
    alpha = _check_alpha(M, alpha)
    k = alpha.i
    a = alpha.u - M.p(k) + M.p(k - 1)
    b = alpha.v
    for s in range(k - 1, -1, -1):
        if M.p(s) <= a and M.q(s) <= b:
            return s
    raise AssertionError("positive significant arrow without a sigma index")


@dataclass(frozen=True)
class SyzygyTerm:
    """coeff * t^t_power * x^a y^b * e_index."""

    index: int
    coeff: int
    t_power: int
    mono: tuple[int, int]

    def __str__(self) -> str:
        parts = []
        if self.t_power:
            parts.append("t" if self.t_power == 1 else f"t^{self.t_power}")
        if self.mono != (0, 0):
            parts.append(monomial_str(*self.mono))
        parts.append(f"e{self.index}")
        return "*".join(parts)


def syzygies(E: EdgeIdeal) -> list[list[SyzygyTerm]]:
    """Generating syzygies of the edge ideal, one row per adjacent pair (i-1, i)."""
    M = E.base
    rows = []
    sigma = E.sigma
    for i in range(1, M.n + 1):
        row = [SyzygyTerm(i - 1, 1, 0, (0, M.q(i) - M.q(i - 1))),
               SyzygyTerm(i, -1, 0, (M.p(i - 1) - M.p(i), 0))]
        if i == E.k:
            row.append(SyzygyTerm(sigma, -1, 1, (E.ell + M.p(E.k - 1) - M.p(sigma),
                                                  E.m + M.q(E.k) - M.q(sigma))))
        rows.append(row)
    return rows


def taylor_syzygies(M: MonomialIdeal) -> list[list[SyzygyTerm]]:
    """Adjacent-pair syzygies of the monomial ideal itself."""
    return [[SyzygyTerm(i - 1, 1, 0, (0, M.q(i) - M.q(i - 1))),
             SyzygyTerm(i, -1, 0, (M.p(i - 1) - M.p(i), 0))] for i in range(1, M.n + 1)]


def syzygy_row_value(row: list[SyzygyTerm], gens: list[Poly]) -> Poly:
    """Evaluate sum of terms * generator in Q[x, y, t] (generators given with three variables)."""
    total = Poly({}, 3)
    for term in row:
        total = total + gens[term.index].shift((*term.mono, term.t_power), term.coeff)
    return total


def syzygy_str(row: list[SyzygyTerm]) -> str:
    s = ""
    for term in row:
        sign = "-" if term.coeff < 0 else "+"
        s += f" {sign} {term}" if s else ("-" if sign == "-" else "") + str(term)
    return s


def initial_ideal(E: EdgeIdeal, order: str = "lex") -> MonomialIdeal:
    return groebner.initial_ideal(E.generators(), order)


def groebner_basis(E: EdgeIdeal, order: str = "lex") -> list[Poly]:
    return groebner.buchberger(E.generators(), order)


def format_binomial(b: Binomial, t_symbol: bool = False) -> str:
    """Human-readable binomial, e.g. ``x^2*y - t*x^3``."""
    lead = monomial_str(*b.lead)
    if b.tail is None:
        return lead
    tail = monomial_str(*b.tail)
    if t_symbol:
        return f"{lead} - t*{tail}"
    c = -Fraction(b.coeff)
    if c == 0:
        return lead
    sign = "-" if c > 0 else "+"
    mag = abs(c)
    return f"{lead} {sign} {tail}" if mag == 1 else f"{lead} {sign} {mag}*{tail}"
