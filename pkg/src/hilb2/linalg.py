"""Exact rank of sparse matrices over the integers and over Z[t].

Rows are dicts mapping a column index to a nonzero entry.  Entries are
``int`` in the integer case and univariate polynomials in t in the
polynomial case.  A polynomial is a tuple of ``int`` coefficients, constant
term first, with no trailing zeros; the zero polynomial is ``()``.

Elimination is fraction-free: a row is cleared with
``pivot * row - entry * pivot_row`` and then divided by its content, so
entries never leave the ring and stay small.  The rank over Z[t] is the
rank over the field Q(t), i.e. the rank at a generic value of t.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

UPoly = tuple[int, ...]


# -- univariate integer polynomials -------------------------------------------------

def trim(c) -> UPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    return trim(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def pneg(a: UPoly) -> UPoly:
    return tuple(-x for x in a)


def psub(a: UPoly, b: UPoly) -> UPoly:
    return padd(a, pneg(b))


def pmul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def monomial(coeff: int, power: int) -> UPoly:
    return trim([0] * power + [coeff])


def peval(a: UPoly, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def content(a: UPoly) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def primitive(a: UPoly) -> UPoly:
    """a divided by its content, with positive leading coefficient."""
    if not a:
        return a
    g = content(a) * (1 if a[-1] > 0 else -1)
    return tuple(c // g for c in a)


def pdivmod(a: UPoly, b: UPoly) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Division with remainder over Q."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lb
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return tuple(q), tuple(a)


def _to_primitive_int(c) -> UPoly:
    c = trim(c)
    if not c:
        return ()
    den = 1
    for x in c:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in c))


def pgcd(a: UPoly, b: UPoly) -> UPoly:
    """Greatest common divisor in Z[t], primitive with positive leading coefficient."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    g = gcd(content(a), content(b))
    a, b = primitive(a), primitive(b)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, _to_primitive_int(r)
    return tuple(g * c for c in primitive(a))


def pexact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = pdivmod(a, b)
    if r or any(Fraction(c).denominator != 1 for c in q):
        raise ArithmeticError("inexact polynomial division")
    return trim(int(c) for c in q)


# -- elimination ----------------------------------------------------------------------

class _Ring:
    def __init__(self, mul, sub, neg, is_zero, row_content, div, size):
        self.mul, self.sub, self.neg, self.is_zero = mul, sub, neg, is_zero
        self.row_content, self.div, self.size = row_content, div, size


def _int_content(entries) -> int:
    g = 0
    for e in entries:
        g = gcd(g, e)
    return g


def _poly_content(entries) -> UPoly:
    g: UPoly = ()
    for e in entries:
        g = pgcd(g, e)
        if g == (1,):
            break
    return g


INT = _Ring(lambda a, b: a * b, lambda a, b: a - b, lambda a: -a, lambda a: a == 0,
            _int_content, lambda a, g: a // g, abs)
POLY = _Ring(pmul, psub, pneg, lambda a: not a, _poly_content, pexact_div,
             lambda a: (len(a), sum(abs(c) for c in a)))


def _normalize(row: dict, ring: _Ring) -> dict:
    g = ring.row_content(row.values())
    if g in (1, (1,)):
        return row
    return {c: ring.div(e, g) for c, e in row.items()}


def _eliminate(row: dict, col, pivot_row: dict, ring: _Ring) -> dict:
    a = row[col]
    p = pivot_row[col]
    out = {}
    for c in row.keys() | pivot_row.keys():
        x = ring.mul(p, row[c]) if c in row else None
        y = ring.mul(a, pivot_row[c]) if c in pivot_row else None
        if x is None:
            v = ring.neg(y)
        elif y is None:
            v = x
        else:
            v = ring.sub(x, y)
        if not ring.is_zero(v):
            out[c] = v
    return _normalize(out, ring)


def _rank(rows: list[dict], ring: _Ring) -> int:
    pivots: dict = {}  # column -> fully reduced pivot row
    for row in rows:
        row = {c: e for c, e in row.items() if not ring.is_zero(e)}
        # pivot rows are fully reduced, so one pass clears every pivot column
        for col in [c for c in row if c in pivots]:
            row = _eliminate(row, col, pivots[col], ring)
        if not row:
            continue
        row = _normalize(row, ring)
        col = min(row, key=lambda c: (ring.size(row[c]), c))
        for other_col, other in list(pivots.items()):
            if col in other:
                pivots[other_col] = _eliminate(other, col, row, ring)
        pivots[col] = row
    return len(pivots)


def rank_int(rows: list[dict[object, int]]) -> int:
    """Rank over Q of a sparse integer matrix."""
    return _rank(rows, INT)


def rank_rational(rows: list[dict[object, Fraction]]) -> int:
    """Rank over Q of a sparse rational matrix (rows are scaled to integers first)."""
    int_rows = []
    for row in rows:
        den = 1
        for e in row.values():
            d = Fraction(e).denominator
            den = den * d // gcd(den, d)
        int_rows.append({c: int(Fraction(e) * den) for c, e in row.items() if e})
    return rank_int(int_rows)


def rank_poly(rows: list[dict[object, UPoly]]) -> int:
    """Rank over Q(t) of a sparse matrix with entries in Z[t]."""
    return _rank(rows, POLY)


def specialize_rows(rows: list[dict[object, UPoly]], t) -> list[dict[object, Fraction]]:
    return [{c: v for c, e in row.items() if (v := peval(e, Fraction(t)))} for row in rows]
