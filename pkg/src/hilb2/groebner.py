"""Buchberger's algorithm in k[x, y] over the rationals.

Only the two lexicographic orders matter here: ``lex`` (x > y) and ``xel``
(y > x).  The engine is general (any polynomials), but it is sized for the
binomial edge ideals and small chart ideals this package produces.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .poly import Poly
from .staircase import MonomialIdeal

ORDERS = {
    "lex": lambda e: (e[0], e[1]),
    "xel": lambda e: (e[1], e[0]),
}


def order_key(order: str):
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; expected 'lex' or 'xel'") from None


def leading_monomial(f: Poly, order: str) -> tuple[int, int]:
    return f.leading(order_key(order))[0]


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def reduce(f: Poly, G: list[Poly], order: str) -> Poly:
    """Full reduction of f modulo G; returns the remainder."""
    key = order_key(order)
    leads = [g.leading(key) for g in G]
    f = Poly(f.terms, f.nvars)
    rem: dict = {}
    while f:
        e, c = f.leading(key)
        for g, (ge, gc) in zip(G, leads):
            if _divides(ge, e):
                shift = (e[0] - ge[0], e[1] - ge[1])
                f = f - g.shift(shift, Fraction(c) / gc)
                break
        else:
            rem[e] = c
            del f.terms[e]
    return Poly(rem, 2)


def s_polynomial(f: Poly, g: Poly, order: str) -> Poly:
    key = order_key(order)
    (fe, fc), (ge, gc) = f.leading(key), g.leading(key)
    lcm = (max(fe[0], ge[0]), max(fe[1], ge[1]))
    return (f.shift((lcm[0] - fe[0], lcm[1] - fe[1]), Fraction(1) / fc)
            - g.shift((lcm[0] - ge[0], lcm[1] - ge[1]), Fraction(1) / gc))


def is_groebner(G: list[Poly], order: str) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    return all(not reduce(s_polynomial(f, g, order), G, order) for f, g in combinations(G, 2))


def buchberger(F: list[Poly], order: str) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by F, monic, sorted by leading monomial."""
    key = order_key(order)
    G = [f for f in F if f]
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        # normal selection: smallest lcm of leading monomials first
        def lcm_of(pair):
            a, b = (G[i].leading(key)[0] for i in pair)
            return key((max(a[0], b[0]), max(a[1], b[1])))

        pairs.sort(key=lcm_of)
        i, j = pairs.pop(0)
        a, b = G[i].leading(key)[0], G[j].leading(key)[0]
        if min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0:
            continue  # coprime leading monomials
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if r:
            G.append(r)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return interreduce(G, order)


def interreduce(G: list[Poly], order: str) -> list[Poly]:
    key = order_key(order)
    G = [g for g in G if g]
    # drop elements whose leading monomial is divisible by another's
    minimal: list[Poly] = []
    for g in sorted(G, key=lambda p: key(p.leading(key)[0])):
        e = g.leading(key)[0]
        if not any(_divides(h.leading(key)[0], e) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        e, c = g.leading(key)
        tail = Poly({k: v for k, v in g.terms.items() if k != e}, 2)
        r = reduce(tail, others, order) if tail else tail
        out.append((Poly.monomial(e, c) + r).monic(key))
    return out


def normal_form(f: Poly, G: list[Poly], order: str) -> Poly:
    return reduce(f, G, order)


def initial_ideal(F: list[Poly], order: str) -> MonomialIdeal:
    G = buchberger(F, order)
    return MonomialIdeal(leading_monomial(g, order) for g in G)
