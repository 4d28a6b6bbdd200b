"""Monomial ideals of k[x, y] seen as staircases.

A monomial ideal is stored by its minimal generators x^{p_i} y^{q_i} sorted
with p strictly decreasing (so q strictly increasing).  The zero ideal is
not representable; the unit ideal is ``MonomialIdeal(((0, 0),))``.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

from .errors import InfiniteColength, Unsupported
from .grading import DegreeValue, Grading, degree_zero_generator, degree_zero_lattice

Exponent = tuple[int, int]


def _minimalize(pairs: Iterable[Exponent]) -> tuple[Exponent, ...]:
    gens: list[Exponent] = []
    # sorted by increasing p then q: a pair is redundant iff some kept pair has q <= its q
    for p, q in sorted(set(pairs)):
        if p < 0 or q < 0:
            raise ValueError(f"negative exponent in generator {(p, q)}")
        if gens and gens[-1][1] <= q:
            continue
        gens.append((p, q))
    return tuple(reversed(gens))


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[Exponent, ...]

    def __init__(self, gens: Iterable[Exponent]):
        gens = _minimalize((int(p), int(q)) for p, q in gens)
        if not gens:
            raise ValueError("the zero ideal is not a supported monomial ideal")
        object.__setattr__(self, "gens", gens)

    # index conventions: generator i is (p_i, q_i), i = 0..n
    @property
    def n(self) -> int:
        return len(self.gens) - 1

    def p(self, i: int) -> int:
        return self.gens[i][0]

    def q(self, i: int) -> int:
        return self.gens[i][1]

    @property
    def is_finite_colength(self) -> bool:
        return self.gens[-1][0] == 0 and self.gens[0][1] == 0

    def contains(self, u: int, v: int) -> bool:
        if u < 0 or v < 0:
            return False
        return any(p <= u and q <= v for p, q in self.gens)

    def __contains__(self, uv: Exponent) -> bool:
        return self.contains(*uv)

    def _require_finite(self):
        if not self.is_finite_colength:
            raise InfiniteColength(f"{self} does not have finite colength")

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Number of standard monomials x^u y^v in each row v = 0, 1, ..."""
        self._require_finite()
        rows = []
        for v in range(self.gens[-1][1]):
            rows.append(min(p for p, q in self.gens if q <= v))
        return tuple(rows)

    @cached_property
    def standard_monomials(self) -> tuple[Exponent, ...]:
        return tuple((u, v) for v, length in enumerate(self.row_lengths) for u in range(length))

    @cached_property
    def standard_set(self) -> frozenset[Exponent]:
        return frozenset(self.standard_monomials)

    @property
    def colength(self) -> int:
        return sum(self.row_lengths)

    def __str__(self) -> str:
        return "<" + ",".join(monomial_str(p, q) for p, q in self.gens) + ">"

    def to_json(self) -> dict:
        return {"gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        return cls(tuple(g) for g in data["gens"])


def monomial_str(u: int, v: int, sep: str = "*") -> str:
    parts = []
    if u:
        parts.append("x" if u == 1 else f"x^{u}")
    if v:
        parts.append("y" if v == 1 else f"y^{v}")
    return sep.join(parts) if parts else "1"


def from_partition(parts: Iterable[int]) -> MonomialIdeal:
    """Finite-colength ideal whose staircase has ``parts[v]`` cells in row v."""
    parts = list(parts)
    if any(a <= 0 for a in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    gens = [(0, len(parts))]
    for v, a in enumerate(parts):
        if v == 0 or a < parts[v - 1]:
            gens.append((a, v))
    return MonomialIdeal(gens)


def contains(M: MonomialIdeal, u: int, v: int) -> bool:
    return M.contains(u, v)


def standard_monomials(M: MonomialIdeal) -> list[Exponent]:
    return list(M.standard_monomials)


@dataclass(frozen=True)
class HilbertFunction:
    """A finitely supported function A -> N, stored sorted by degree."""

    entries: tuple[tuple[DegreeValue, int], ...]

    def __init__(self, entries):
        if isinstance(entries, dict):
            entries = entries.items()
        cleaned = tuple(sorted((d, int(k)) for d, k in entries if k))
        if any(k < 0 for _, k in cleaned):
            raise ValueError("Hilbert function values must be nonnegative")
        object.__setattr__(self, "entries", cleaned)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.entries)

    def __call__(self, d: DegreeValue) -> int:
        return dict(self.entries).get(d, 0)

    def as_dict(self) -> dict[DegreeValue, int]:
        return dict(self.entries)

    def to_json(self) -> list:
        return [{"degree": d.to_json(), "value": k} for d, k in self.entries]

    @classmethod
    def from_json(cls, data: list) -> HilbertFunction:
        return cls((DegreeValue.from_json(e["degree"]), int(e["value"])) for e in data)


def hilbert_function(M: MonomialIdeal, g: Grading) -> HilbertFunction:
    M._require_finite()
    return HilbertFunction(Counter(g.degree_of(u, v) for u, v in M.standard_monomials))


def colon_monomial(M: MonomialIdeal, a: int, b: int) -> MonomialIdeal:
    """Minimal generators of (M : x^a y^b)."""
    return MonomialIdeal((max(p - a, 0), max(q - b, 0)) for p, q in M.gens)


def factor_gcd(M: MonomialIdeal) -> tuple[Exponent, MonomialIdeal]:
    """Split M = x^a y^b * Q with Q of finite colength (or the unit ideal)."""
    a, b = M.gens[-1][0], M.gens[0][1]
    return (a, b), colon_monomial(M, a, b)


def codimension(M: MonomialIdeal) -> int:
    """Codimension of a nonzero monomial ideal in k[x, y], read off the staircase."""
    if M.gens == ((0, 0),):
        return 0  # unit ideal: empty zero set, reported as 0 by convention
    return 2 if M.is_finite_colength else 1


@dataclass(frozen=True)
class FactorSpace:
    kind: Literal["projective", "affine"]
    m: int

    def __str__(self) -> str:
        return f"{'P' if self.kind == 'projective' else 'A'}^{self.m}"


def _monomials_of_degree_count(a: int, b: int, g: Grading) -> int:
    """#{(u, v) in N^2 : deg x^u y^v = deg x^a y^b}, for a positive grading."""
    lattice = degree_zero_lattice(g)
    if not lattice:
        return 1
    (wu, wv), = lattice  # positivity rules out rank two; the vector has mixed signs
    count = 1
    for sign in (1, -1):
        k = 1
        while a + sign * k * wu >= 0 and b + sign * k * wv >= 0:
            count += 1
            k += 1
    return count


def classify_principal_factor(a: int, b: int, g: Grading) -> FactorSpace:
    """Shape of the Hilbert scheme of principal ideals of degree deg(x^a y^b).

    Positively graded rings give P^m with m + 1 the number of monomials of
    that degree; when the degree-zero part is k[x^v] the scheme is A^m with
    m the largest r such that (a, b) - r*v is still an exponent.
    """
    if (a, b) == (0, 0):
        return FactorSpace("affine", 0)
    shape = degree_zero_generator(g)
    if shape.kind == "trivial":
        return FactorSpace("projective", _monomials_of_degree_count(a, b, g) - 1)
    if shape.kind == "monogenic":
        vu, vv = shape.generator
        r = min(a // vu if vu else a + b + 1, b // vv if vv else a + b + 1)
        return FactorSpace("affine", r)
    raise Unsupported("degree-zero monomials need two generators; no admissible principal ideal")


def lex_sorted_by_degree(M: MonomialIdeal, g: Grading) -> dict[DegreeValue, list[Exponent]]:
    """Standard monomials of M grouped by degree, each group in increasing lex order."""
    groups: dict[DegreeValue, list[Exponent]] = {}
    for uv in sorted(M.standard_monomials):
        groups.setdefault(g.degree_of(*uv), []).append(uv)
    return groups


def lex_count(sorted_group: list[Exponent], w: Exponent) -> int:
    return bisect_right(sorted_group, w)
