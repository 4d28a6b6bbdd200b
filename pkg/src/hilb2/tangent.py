"""Tangent spaces at edge ideals as explicit linear systems.

A tangent vector at I is a degree-preserving map I -> S/I.  Sending the
generator e_i to sum c^i_{u,v} x^u y^v over the arrows (i, u, v) gives one
unknown per arrow; the syzygies of I then impose one linear equation
F(i, u, v) for each 1 <= i <= n and each standard monomial x^u y^v.

Coefficients are polynomials in t (tuples of ints, see ``linalg``).  A system
built with a numeric t still stores the polynomial coefficients and evaluates
them on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import edge, groebner, linalg
from .arrows import Arrow, all_arrows, find_arrow
from .errors import PreconditionViolated, VerificationFailed
from .grading import Grading
from .linalg import UPoly, padd, pmul
from .poly import Poly
from .staircase import MonomialIdeal

Key = tuple[int, int, int]
SPECIAL_T = (0, 1, -1, 2)


@dataclass(frozen=True)
class Equation:
    label: Key
    terms: dict[Key, UPoly]

    def at(self, t) -> dict[Key, Fraction]:
        return {k: v for k, e in self.terms.items() if (v := linalg.peval(e, Fraction(t)))}

    def to_json(self) -> dict:
        return {"label": list(self.label),
                "terms": [{"var": list(k), "coeff_t_poly": list(self.terms[k])}
                          for k in sorted(self.terms)]}

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for k in sorted(self.terms, key=lambda k: (-k[0], -k[1], k[2])):
            out = _append_term(out, self.terms[k], "c[%d][%d][%d]" % k)
        return out


def _append_term(out: str, coeff: UPoly, var: str) -> str:
    for power, c in enumerate(coeff):
        if not c:
            continue
        mono = "*".join(s for s in ((f"{abs(c)}" if abs(c) != 1 else ""),
                                    ("t" if power == 1 else f"t^{power}" if power else ""), var) if s)
        if not out:
            out = ("-" if c < 0 else "") + mono
        else:
            out += (" - " if c < 0 else " + ") + mono
    return out


@dataclass(frozen=True)
class TangentSystem:
    base: MonomialIdeal
    grading: Grading
    alpha: Arrow | None
    t: Fraction | None  # None means t is kept as a formal variable
    variables: tuple[Arrow, ...]
    equations: tuple[Equation, ...]
    _index: dict = field(default=None, init=False, compare=False, repr=False)

    @property
    def r(self) -> int:
        return len(self.variables)

    @property
    def symbolic(self) -> bool:
        return self.t is None

    def equation(self, i: int, u: int, v: int) -> Equation:
        if self._index is None:
            object.__setattr__(self, "_index", {e.label: e for e in self.equations})
        return self._index[(i, u, v)]

    def rows(self, t=None) -> list[dict]:
        """Polynomial rows, or rational rows at t (default: the system's own t)."""
        t = self.t if t is None else t
        if t is None:
            return [e.terms for e in self.equations]
        return [e.at(t) for e in self.equations]

    def rank(self) -> int:
        if self.symbolic:
            return linalg.rank_poly(self.rows())
        return linalg.rank_rational(self.rows())

    def dimension(self) -> int:
        return self.r - self.rank()

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "alpha": list(self.alpha.key) if self.alpha else None,
            "t": None if self.t is None else str(self.t),
            "variables": [list(a.key) for a in self.variables],
            "equations": [e.to_json() for e in self.equations],
        }


def _xel_basis(M: MonomialIdeal, alpha: Arrow | None, t) -> list[Poly]:
    if alpha is None:
        return [Poly.monomial(gen) for gen in M.gens]
    return groebner.buchberger(edge.edge_ideal(M, alpha, t).generators(), "xel")


@lru_cache(maxsize=256)
def _xel_basis_cached(M: MonomialIdeal, alpha_key: Key | None, t: Fraction) -> tuple[Poly, ...]:
    alpha = None if alpha_key is None else edge._check_alpha(M, alpha_key)
    return tuple(_xel_basis(M, alpha, t))


def _normal_form(M, alpha, t, a: int, b: int) -> Poly:
    G = list(_xel_basis_cached(M, None if alpha is None else alpha.key, Fraction(t)))
    return groebner.reduce(Poly.monomial((a, b)), G, "xel")


def b_value(M: MonomialIdeal, alpha: Arrow | tuple, u: int, v: int) -> int:
    """Largest mu such that x^{u - mu l} y^{v - mu m} reduces to a nonzero multiple of x^u y^v.

    The reduction uses the xel Groebner basis of the edge ideal at t = 1.  The
    result is checked against a membership description: for 0 < k <= b the
    monomial x^{u - k l} y^{v - k m} is divisible by some x^{p_j} y^{q_j} with
    j >= k_alpha and by none with j < k_alpha.
    """
    if (u, v) in M:
        raise PreconditionViolated(f"x^{u}y^{v} lies in {M}")
    alpha = edge._check_alpha(M, alpha)
    ell, m = alpha.u - M.p(alpha.i), alpha.v - M.q(alpha.i)
    b = 0
    mu = 1
    while u - mu * ell >= 0 and v - mu * m >= 0:
        nf = _normal_form(M, alpha, 1, u - mu * ell, v - mu * m)
        if set(nf.terms) == {(u, v)}:
            b = mu
        mu += 1
    head, tail = M.gens[:alpha.i], M.gens[alpha.i:]

    def on_chain(a: int, c: int) -> bool:
        return (a >= 0 and c >= 0 and any(p <= a and q <= c for p, q in tail)
                and not any(p <= a and q <= c for p, q in head))

    membership = 0
    while on_chain(u - (membership + 1) * ell, v - (membership + 1) * m):
        membership += 1
    if membership != b:
        raise VerificationFailed(f"b_{{{u},{v}}}: reduction gives {b}, membership gives {membership}")
    return b


def _add(terms: dict, key: Key, coeff: UPoly, M: MonomialIdeal, g: Grading) -> None:
    i, u, v = key
    if u < 0 or v < 0 or find_arrow(M, g, i, u, v) is None:
        return
    s = padd(terms.get(key, ()), coeff)
    if s:
        terms[key] = s
    else:
        terms.pop(key, None)


def equation(M: MonomialIdeal, g: Grading, alpha: Arrow | None, i: int, u: int, v: int,
             sigma: int | None = None) -> Equation:
    """The equation F(i, u, v) with polynomial coefficients in t."""
    p, q = M.p, M.q
    terms: dict[Key, UPoly] = {}
    if alpha is None:
        _add(terms, (i - 1, u, v + q(i - 1) - q(i)), (1,), M, g)
        _add(terms, (i, u - p(i - 1) + p(i), v), (-1,), M, g)
        return Equation((i, u, v), terms)
    k = alpha.i
    ell, m = alpha.u - p(k), alpha.v - q(k)
    if sigma is None:
        sigma = edge.sigma_index(M, alpha)
    for mu in range(b_value(M, alpha, u, v) + 1):
        _add(terms, (i - 1, u - mu * ell, v + q(i - 1) - q(i) - mu * m),
             linalg.monomial(1, mu), M, g)
        _add(terms, (i, u - p(i - 1) + p(i) - mu * ell, v - mu * m),
             linalg.monomial(-1, mu), M, g)
        if i == k:
            _add(terms, (sigma, u - p(k - 1) + p(sigma) - (mu + 1) * ell,
                         v - q(k) + q(sigma) - (mu + 1) * m),
                 linalg.monomial(-1, mu + 1), M, g)
    return Equation((i, u, v), terms)


def build_system(M: MonomialIdeal, g: Grading, alpha: Arrow | tuple | None = None,
                 t=None) -> TangentSystem:
    """All equations F(i, u, v); alpha None gives the system at M itself."""
    if alpha is not None:
        alpha = edge._check_alpha(M, alpha)
        sigma = edge.sigma_index(M, alpha)
    else:
        sigma = None
    eqs = tuple(equation(M, g, alpha, i, u, v, sigma)
                for i in range(1, M.n + 1) for u, v in M.standard_monomials)
    return TangentSystem(M, g, alpha, None if t is None else Fraction(t),
                         tuple(all_arrows(M, g)), eqs)


def in_reduced_system(M: MonomialIdeal, label: Key) -> bool:
    i, u, v = label
    return u >= M.p(i - 1) or v >= M.q(i) - M.q(i - 1)


def reduced_system(T: TangentSystem) -> TangentSystem:
    """The equations F(i, u, v) with u >= p_{i-1} or v >= q_i - q_{i-1}."""
    eqs = tuple(e for e in T.equations if in_reduced_system(T.base, e.label))
    return TangentSystem(T.base, T.grading, T.alpha, T.t, T.variables, eqs)


def combine(T: TangentSystem, combination: list[tuple[int, Key]]) -> dict[Key, UPoly]:
    """Expand sum t^power F(j, r, s); an F whose monomial has a negative exponent or lies in M is 0."""
    total: dict[Key, UPoly] = {}
    for power, (j, r, s) in combination:
        if r < 0 or s < 0 or (r, s) in T.base:
            continue
        for key, c in T.equation(j, r, s).terms.items():
            value = padd(total.get(key, ()), pmul(c, linalg.monomial(1, power)))
            if value:
                total[key] = value
            else:
                total.pop(key, None)
    return total


def relation_terms(T: TangentSystem, i: int, u: int, v: int) -> list[tuple[int, Key]]:
    """The (t-power, label) pairs of the relation attached to (i, u, v).

    The relation is the sum of F(j, u - p_{i-1} + p_{j-1}, v - q_i + q_j) for
    i <= j <= sigma plus the sum over sigma < j <= n and lambda >= 0 of
    t^lambda F(j, u - p_{i-1} + p_{j-1} - lambda l, v - q_i + q_j - lambda m).
    Terms whose monomial has a negative exponent or lies in M are dropped.
    """
    M = T.base
    if T.alpha is None:
        raise PreconditionViolated("relations are stated for an edge ideal")
    if (u, v) in M or not (1 <= i <= M.n) or u < 0 or v < 0:
        raise PreconditionViolated(f"(i, u, v) = {(i, u, v)} is not a valid label")
    if not (u < M.p(i - 1) and v < M.q(i) - M.q(i - 1)):
        raise PreconditionViolated(f"(i, u, v) = {(i, u, v)} is outside the relation range")
    alpha = T.alpha
    ell, m = alpha.u - M.p(alpha.i), alpha.v - M.q(alpha.i)
    sigma = edge.sigma_index(M, alpha)
    out = []

    def add(power: int, j: int, r: int, s: int) -> None:
        if r >= 0 and s >= 0 and (r, s) not in M:
            out.append((power, (j, r, s)))

    for j in range(i, sigma + 1):
        add(0, j, u - M.p(i - 1) + M.p(j - 1), v - M.q(i) + M.q(j))
    for j in range(sigma + 1, M.n + 1):
        lam = 0
        while u - M.p(i - 1) + M.p(j - 1) - lam * ell >= 0:
            add(lam, j, u - M.p(i - 1) + M.p(j - 1) - lam * ell, v - M.q(i) + M.q(j) - lam * m)
            lam += 1
    return out


def relation_residual(T: TangentSystem, i: int, u: int, v: int) -> dict[Key, UPoly]:
    """Expanded relation attached to (i, u, v); it vanishes identically when the relation holds."""
    return combine(T, relation_terms(T, i, u, v))


def relation_instances(M: MonomialIdeal) -> list[Key]:
    """Every (i, u, v) meeting the relation's hypotheses."""
    return [(i, u, v) for i in range(1, M.n + 1) for u, v in M.standard_monomials
            if u < M.p(i - 1) and v < M.q(i) - M.q(i - 1)]


@dataclass(frozen=True)
class DimensionReport:
    r: int
    generic: int | None
    by_t: dict
    reduced: int | None = None
    oracle: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        values = set(self.by_t.values()) | set(self.oracle.values())
        if self.generic is not None:
            values.add(self.generic)
        if self.reduced is not None:
            values.add(self.reduced)
        return len(values) == 1

    @property
    def dimension(self) -> int:
        if self.generic is not None:
            return self.generic
        return next(iter(self.by_t.values()))


def tangent_dimension(M: MonomialIdeal, g: Grading, alpha: Arrow | tuple | None = None,
                      t=None) -> int:
    """Dimension of the tangent space at the edge ideal (or at M when alpha is None).

    With t None the rank is taken over Q(t), and the system is rebuilt at
    t = 0, 1, -1, 2; all answers must agree.
    """
    if t is not None or alpha is None:
        return build_system(M, g, alpha, 0 if t is None else t).dimension()
    report = dimension_report(M, g, alpha, oracle=False)
    if not report.consistent:
        raise VerificationFailed(f"tangent dimensions disagree: {report}")
    return report.generic


def dimension_report(M: MonomialIdeal, g: Grading, alpha: Arrow | tuple | None = None,
                     ts=SPECIAL_T, oracle: bool = True) -> DimensionReport:
    """Generic rank, specialized ranks, reduced-system rank and (optionally) oracle values."""
    T = build_system(M, g, alpha, None)
    generic = T.dimension() if alpha is not None else None
    by_t = {str(Fraction(t)): build_system(M, g, alpha, t).dimension() for t in ts}
    R = reduced_system(T)
    reduced = R.r - (linalg.rank_poly(R.rows()) if alpha is not None
                     else linalg.rank_rational(R.rows(0)))
    orc = {str(Fraction(t)): oracle_dimension(M, g, alpha, t) for t in ts} if oracle else {}
    return DimensionReport(T.r, generic, by_t, reduced, orc)


def oracle_dimension(M: MonomialIdeal, g: Grading, alpha: Arrow | tuple | None = None,
                     t=0) -> int:
    """Dimension of degree-zero Hom(I, S/I), computed straight from the syzygies of I.

    Each syzygy sum_j s_j e_j gives the condition sum_j s_j phi(e_j) = 0 in S/I;
    products are reduced to xel normal form with a Groebner basis of I and the
    coefficient of every standard monomial must vanish.
    """
    t = Fraction(t)
    if alpha is None:
        rows_syz = edge.taylor_syzygies(M)
        G = [Poly.monomial(gen) for gen in M.gens]
    else:
        E = edge.edge_ideal(M, alpha, t)
        rows_syz = edge.syzygies(E)
        G = groebner.buchberger(E.generators(), "xel")
    variables = all_arrows(M, g)
    by_gen: dict[int, list[Arrow]] = {}
    for a in variables:
        by_gen.setdefault(a.i, []).append(a)
    nf_cache: dict[tuple[int, int], Poly] = {}

    def nf(a: int, b: int) -> Poly:
        if (a, b) not in nf_cache:
            nf_cache[(a, b)] = groebner.reduce(Poly.monomial((a, b)), G, "xel")
        return nf_cache[(a, b)]

    rows: dict[tuple, dict[Key, Fraction]] = {}
    for idx, syz in enumerate(rows_syz):
        for term in syz:
            scale = term.coeff * t ** term.t_power
            if not scale:
                continue
            for a in by_gen.get(term.index, []):
                for mono, c in nf(a.u + term.mono[0], a.v + term.mono[1]).terms.items():
                    row = rows.setdefault((idx, mono), {})
                    row[a.key] = row.get(a.key, 0) + scale * c
    return len(variables) - linalg.rank_rational(list(rows.values()))


# -- leading variables --------------------------------------------------------------------

def _order_key(M: MonomialIdeal, a: Arrow):
    """Larger key means larger variable in an order meeting conditions C0 to C3.

    Larger u - p_i is larger.  On ties, nonnegative variables prefer the
    larger index, nonpositive and utterly insignificant ones the smaller index.
    Ties across those groups are broken arbitrarily but consistently.
    """
    nonneg = a.u >= M.p(a.i)
    utterly = a.u < M.p(a.i) and a.v < M.q(a.i)
    group = 0 if nonneg else (2 if utterly else 1)
    index = a.i if nonneg else -a.i
    return (a.u - M.p(a.i), group, index, a.v)


def leading_variable(T: TangentSystem, e: Equation) -> Key | None:
    """Initial variable of F: lowest t-power first, then the largest variable."""
    if not e.terms:
        return None
    low = min(next(p for p, c in enumerate(coeff) if c) for coeff in e.terms.values())
    candidates = [k for k, coeff in e.terms.items()
                  if next(p for p, c in enumerate(coeff) if c) == low]
    arrows = {a.key: a for a in T.variables}
    return max(candidates, key=lambda k: _order_key(T.base, arrows[k]))


def expected_leading_variable(M: MonomialIdeal, label: Key) -> Key:
    """Initial variable predicted case by case for an equation of the reduced system."""
    i, u, v = label
    if u >= M.p(i - 1):
        return (i, u - M.p(i - 1) + M.p(i), v)
    return (i - 1, u, v + M.q(i - 1) - M.q(i))


def check_leading_variables(T: TangentSystem) -> None:
    """Initial variables of the reduced system are distinct and are exactly the insignificant arrows."""
    R = reduced_system(T)
    leads = []
    for e in R.equations:
        lead = leading_variable(R, e)
        expected = expected_leading_variable(T.base, e.label)
        if lead != expected:
            raise VerificationFailed(f"F{e.label}: initial variable {lead}, expected {expected}")
        leads.append(lead)
    insig = {a.key for a in T.variables if not a.significant}
    if len(set(leads)) != len(leads) or set(leads) != insig:
        raise VerificationFailed("initial variables of the reduced system are not the insignificant arrows")
