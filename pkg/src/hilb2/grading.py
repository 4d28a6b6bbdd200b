"""Gradings of k[x, y] by a finitely generated abelian group.

The group is A = Z^r + Z/m_1 + ... + Z/m_s.  A degree is stored as a pair of
integer tuples (free part, torsion residues); the torsion residues are always
reduced, so structural equality of :class:`DegreeValue` is equality in A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Literal


@dataclass(frozen=True, order=True)
class DegreeValue:
    free: tuple[int, ...] = ()
    torsion: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"free": list(self.free), "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> DegreeValue:
        return cls(tuple(int(a) for a in data.get("free", ())),
                   tuple(int(a) for a in data.get("torsion", ())))


@dataclass(frozen=True)
class DegreeZeroMonoid:
    """Shape of the monoid of exponents (u, v) with deg(x^u y^v) = 0."""

    kind: Literal["trivial", "monogenic", "not_monogenic"]
    generator: tuple[int, int] | None = None


@dataclass(frozen=True)
class Grading:
    free_rank: int
    torsion_moduli: tuple[int, ...]
    deg_x: DegreeValue
    deg_y: DegreeValue
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        moduli = tuple(int(m) for m in self.torsion_moduli)
        if any(m < 2 for m in moduli):
            raise ValueError(f"torsion moduli must be >= 2, got {moduli}")
        object.__setattr__(self, "torsion_moduli", moduli)
        for name in ("deg_x", "deg_y"):
            d = getattr(self, name)
            if len(d.free) != self.free_rank or len(d.torsion) != len(moduli):
                raise ValueError(f"{name} has the wrong shape for this group")
            object.__setattr__(self, name, self.reduce(d))

    # -- constructors ---------------------------------------------------

    @classmethod
    def trivial(cls) -> Grading:
        """The grading by the zero group: every monomial has degree 0."""
        return cls(0, (), DegreeValue(), DegreeValue())

    @classmethod
    def integral(cls, dx: int, dy: int) -> Grading:
        return cls(1, (), DegreeValue((dx,)), DegreeValue((dy,)))

    @classmethod
    def cyclic(cls, m: int, dx: int, dy: int) -> Grading:
        return cls(0, (m,), DegreeValue((), (dx,)), DegreeValue((), (dy,)))

    # -- group arithmetic ----------------------------------------------

    def reduce(self, d: DegreeValue) -> DegreeValue:
        return DegreeValue(tuple(d.free),
                           tuple(a % m for a, m in zip(d.torsion, self.torsion_moduli)))

    def zero(self) -> DegreeValue:
        return DegreeValue((0,) * self.free_rank, (0,) * len(self.torsion_moduli))

    def add(self, a: DegreeValue, b: DegreeValue) -> DegreeValue:
        return DegreeValue(
            tuple(x + y for x, y in zip(a.free, b.free)),
            tuple((x + y) % m for x, y, m in zip(a.torsion, b.torsion, self.torsion_moduli)),
        )

    def scale(self, a: DegreeValue, k: int) -> DegreeValue:
        return DegreeValue(tuple(k * x for x in a.free),
                           tuple((k * x) % m for x, m in zip(a.torsion, self.torsion_moduli)))

    def degree_of(self, u: int, v: int) -> DegreeValue:
        key = (u, v)
        d = self._cache.get(key)
        if d is None:
            d = self.add(self.scale(self.deg_x, u), self.scale(self.deg_y, v))
            self._cache[key] = d
        return d

    def is_zero(self, u: int, v: int) -> bool:
        """True iff x^u y^v has degree 0; exponents may be negative."""
        return self.degree_of(u, v) == self.zero()

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion_moduli),
            "deg_x": self.deg_x.to_json(),
            "deg_y": self.deg_y.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Grading:
        for key in ("free_rank", "deg_x", "deg_y"):
            if key not in data:
                raise ValueError(f"grading is missing field {key!r}")
        moduli = tuple(int(m) for m in data.get("torsion", ()))
        degs = []
        for key in ("deg_x", "deg_y"):
            d = DegreeValue.from_json(data[key])
            for a, m in zip(d.torsion, moduli):
                if not 0 <= a < m:
                    raise ValueError(f"{key}: torsion residue {a} not in [0, {m})")
            degs.append(d)
        return cls(int(data["free_rank"]), moduli, degs[0], degs[1])


def degree_of(u: int, v: int, g: Grading) -> DegreeValue:
    return g.degree_of(u, v)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def free_kernel(g: Grading) -> list[tuple[int, int]]:
    """A Z-basis of {(u, v) in Z^2 : u*free(deg x) + v*free(deg y) = 0}."""
    fx, fy = g.deg_x.free, g.deg_y.free
    if not any(fx) and not any(fy):
        return [(1, 0), (0, 1)]
    for a, b in zip(fx, fy):
        if a or b:
            d = gcd(a, b)
            w = (b // d, -a // d)
            break
    if all(w[0] * a + w[1] * b == 0 for a, b in zip(fx, fy)):
        return [w]
    return []


def torsion_order(g: Grading, u: int, v: int) -> int:
    """Order of the torsion part of deg(x^u y^v) in the torsion subgroup."""
    order = 1
    for a, b, m in zip(g.deg_x.torsion, g.deg_y.torsion, g.torsion_moduli):
        t = (u * a + v * b) % m
        order = _lcm(order, m // gcd(m, t))
    return order


def degree_zero_lattice(g: Grading) -> list[tuple[int, int]]:
    """A Z-basis of the sublattice of Z^2 of exponent vectors with degree 0.

    Rank 2 is reported as the basis {(N, 0), (0, N)} of a finite-index
    sublattice, which is all callers need.
    """
    basis = free_kernel(g)
    if len(basis) == 2:
        n = 1
        for m in g.torsion_moduli:
            n = _lcm(n, m)
        return [(n, 0), (0, n)]
    if len(basis) == 1:
        w = basis[0]
        s = torsion_order(g, *w)
        return [(s * w[0], s * w[1])]
    return []


def degree_zero_generator(g: Grading) -> DegreeZeroMonoid:
    """Classify the monoid {(u, v) in N^2 : deg(x^u y^v) = 0}.

    The degree-zero lattice is found exactly (free kernel refined by the
    torsion order), so no search bound is needed: a rank-one lattice Z*w
    meets N^2 in N*w when w can be oriented into N^2 and in {0} otherwise,
    and a rank-two lattice has finite index, so it contains points on both
    axes and needs two generators.
    """
    lattice = degree_zero_lattice(g)
    if len(lattice) == 2:
        return DegreeZeroMonoid("not_monogenic")
    if not lattice:
        return DegreeZeroMonoid("trivial")
    a, b = lattice[0]
    if a <= 0 and b <= 0:
        a, b = -a, -b
    if a >= 0 and b >= 0:
        return DegreeZeroMonoid("monogenic", (a, b))
    return DegreeZeroMonoid("trivial")
