"""Sparse multivariate polynomials with exact rational coefficients.

Terms are kept in a dict mapping exponent tuples to ``int`` or ``Fraction``
coefficients; zero coefficients are never stored.  Variables 0 and 1 are
always x and y.  Extra variables are used for the parameter t of an edge
ideal or for the chart parameters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

Coeff = int | Fraction


class Poly:
    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], Coeff] | Iterable = (), nvars: int = 2):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[tuple[int, ...], Coeff] = {}
        for e, c in terms:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in acc.items() if c}
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Poly:
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def monomial(cls, exp: tuple[int, ...], coeff: Coeff = 1) -> Poly:
        return cls._raw({tuple(exp): coeff} if coeff else {}, len(exp))

    @classmethod
    def constant(cls, c: Coeff, nvars: int = 2) -> Poly:
        return cls.monomial((0,) * nvars, c)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: Poly) -> Poly:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(terms, self.nvars)

    def __neg__(self) -> Poly:
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c: Coeff) -> Poly:
        if not c:
            return Poly._raw({}, self.nvars)
        return Poly._raw({e: c * v for e, v in self.terms.items()}, self.nvars)

    def shift(self, exp: tuple[int, ...], c: Coeff = 1) -> Poly:
        """Multiply by the term c * X^exp."""
        if not c:
            return Poly._raw({}, self.nvars)
        return Poly._raw({tuple(a + b for a, b in zip(e, exp)): c * v
                          for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        terms: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in terms.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def leading(self, key: Callable) -> tuple[tuple[int, ...], Coeff]:
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def substitute(self, values: Mapping[int, Coeff], keep: int = 2) -> Poly:
        """Evaluate variables listed in ``values`` and drop every variable >= ``keep``.

        Every variable with index >= keep must be assigned.
        """
        terms: dict[tuple[int, ...], Coeff] = {}
        for e, c in self.terms.items():
            for idx in range(keep, self.nvars):
                if e[idx]:
                    c = c * Fraction(values[idx]) ** e[idx]
            key = e[:keep]
            terms[key] = terms.get(key, 0) + c
        return Poly._raw({e: c for e, c in terms.items() if c}, keep)

    def extend(self, nvars: int) -> Poly:
        pad = (0,) * (nvars - self.nvars)
        return Poly._raw({e + pad: c for e, c in self.terms.items()}, nvars)

    def monic(self, key: Callable) -> Poly:
        _, c = self.leading(key)
        return self.scale(Fraction(1) / c)

    def to_str(self, names: list[str] | None = None) -> str:
        names = names or ["x", "y", "t"][: self.nvars] + [f"z{i}" for i in range(3, self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def x_y_poly(terms: Iterable[tuple[int, int, Coeff]]) -> Poly:
    """Bivariate polynomial from (u, v, coeff) triples."""
    return Poly((((u, v), c) for u, v, c in terms), 2)
