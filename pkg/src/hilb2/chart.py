"""A d-parameter family of ideals through the lex-most ideal.

Every significant arrow of the lex-most ideal L contributes one parameter.
The family's generators f_0, ..., f_n are built from f_n = g_1 ... g_n
downwards, each step dividing exactly by the y-monic polynomial g_{i+1}.
Polynomials live in Q[x, y, c_1, ..., c_d] (see ``poly.Poly``), with the
parameters as variables 2, 3, ...
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import groebner
from .arrows import Arrow, ArrowClass, significant
from .errors import InexactDivision, VerificationFailed
from .grading import Grading
from .poly import Poly
from .poset import lex_most
from .staircase import HilbertFunction, MonomialIdeal, hilbert_function

DEFAULT_SEED = 2024


def default_seed(seed: int | None = None) -> int:
    """An explicit seed wins, then HILB2_SEED, then the built-in default."""
    if seed is not None:
        return seed
    env = os.environ.get("HILB2_SEED")
    return int(env) if env else DEFAULT_SEED


def param_name(a: Arrow) -> str:
    return f"c[{a.i}][{a.u}][{a.v}]"


@dataclass(frozen=True)
class ChartFamily:
    h: HilbertFunction
    grading: Grading
    lexmost: MonomialIdeal
    params: tuple[Arrow, ...]
    g: tuple[Poly, ...]  # g[0] is g_1
    f: tuple[Poly, ...]  # f[i] is f_i
    epsilon: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return len(self.params)

    @property
    def nvars(self) -> int:
        return 2 + self.d

    def names(self) -> list[str]:
        return ["x", "y"] + [param_name(a) for a in self.params]

    def to_json(self) -> dict:
        names = self.names()
        return {
            "grading": self.grading.to_json(),
            "hilbert": self.h.to_json(),
            "lexmost": self.lexmost.to_json(),
            "params": [list(a.key) for a in self.params],
            "g": [p.to_str(names) for p in self.g],
            "f": [p.to_str(names) for p in self.f],
            "epsilon": [[*k, e] for k, e in sorted(self.epsilon.items())],
        }


def _y_degree(f: Poly) -> int:
    return max(e[1] for e in f.terms)


def divide_by_monic_in_y(f: Poly, g: Poly) -> Poly:
    """Exact quotient f / g where g has leading y-power with coefficient 1."""
    dg = _y_degree(g)
    top = [e for e in g.terms if e[1] == dg]
    if len(top) != 1 or any(top[0][k] for k in range(f.nvars) if k != 1) or g.terms[top[0]] != 1:
        raise InexactDivision("divisor is not monic in y")
    quotient = Poly({}, f.nvars)
    rem = Poly(f.terms, f.nvars)
    while rem:
        dr = _y_degree(rem)
        if dr < dg:
            raise InexactDivision(f"nonzero remainder {rem.to_str()}")
        # quotient term: the y^dr part of rem divided by y^dg
        lead = Poly({(e[0], e[1] - dg, *e[2:]): c
                     for e, c in rem.terms.items() if e[1] == dr}, f.nvars)
        quotient = quotient + lead
        rem = rem - lead * g
    return quotient


def _epsilon(L: MonomialIdeal, a: Arrow) -> int:
    i = a.i
    target = (a.u, a.v - L.q(i) + L.q(i + 1))
    return max(j for j, (p, q) in enumerate(L.gens) if p <= target[0] and q <= target[1])


def build_chart(h: HilbertFunction, g: Grading, L: MonomialIdeal | None = None) -> ChartFamily:
    """Construct g_1..g_n and f_0..f_n for the lex-most ideal of h."""
    L = lex_most(h, g) if L is None else L
    params = tuple(significant(L, g))
    if any(a.cls is ArrowClass.POSITIVE for a in params):
        raise VerificationFailed(f"{L} has positive significant arrows")
    nv = 2 + len(params)
    var = {a.key: 2 + idx for idx, a in enumerate(params)}
    n = L.n

    def mono(x: int, y: int, param: Arrow | None = None, c=1) -> Poly:
        e = [0] * nv
        e[0], e[1] = x, y
        if param is not None:
            e[var[param.key]] = 1
        return Poly.monomial(tuple(e), c)

    gs = []
    for i in range(1, n + 1):
        gi = mono(0, L.q(i) - L.q(i - 1))
        for a in params:
            if a.i == i and a.u == L.p(i) and a.cls is ArrowClass.NONNEG:
                gi = gi + mono(0, a.v - L.q(i - 1), a)
        gs.append(gi)

    f: list[Poly | None] = [None] * (n + 1)
    fn = Poly.constant(1, nv)
    for gi in gs:
        fn = fn * gi
    f[n] = fn
    eps = {}
    for i in range(n - 1, -1, -1):
        acc = f[i + 1] * mono(L.p(i) - L.p(i + 1), 0)
        for a in params:
            if a.i == i and a.cls is ArrowClass.NONPOS:
                e = _epsilon(L, a)
                eps[a.key] = e
                acc = acc + f[e] * mono(a.u - L.p(e), a.v - L.q(i) + L.q(i + 1) - L.q(e), a)
        f[i] = divide_by_monic_in_y(acc, gs[i])
    return ChartFamily(h, g, L, params, tuple(gs), tuple(f), eps)


def _lex_key(e):
    return (e[0], e[1])


def symbolic_checks(C: ChartFamily) -> list[str]:
    """Checks that hold over the parameter ring; returns failure messages."""
    failures = []
    L, g = C.lexmost, C.grading
    for i, fi in enumerate(C.f):
        xy = {e[:2] for e in fi.terms}
        lead = max(xy, key=_lex_key)
        lead_terms = [e for e in fi.terms if e[:2] == lead]
        if lead != L.gens[i] or len(lead_terms) != 1 or any(lead_terms[0][2:]) \
                or fi.terms[lead_terms[0]] != 1:
            failures.append(f"f_{i}: lex leading term is not x^{L.p(i)}y^{L.q(i)}")
        if len({g.degree_of(*e) for e in xy}) != 1:
            failures.append(f"f_{i} is not homogeneous")
        prod = Poly.constant(1, C.nvars)
        for gk in C.g[:i]:
            prod = prod * gk
        try:
            divide_by_monic_in_y(fi, prod)
        except InexactDivision:
            failures.append(f"g_1...g_{i} does not divide f_{i}")
    for i, gi in enumerate(C.g, start=1):
        if len({g.degree_of(*e[:2]) for e in gi.terms}) != 1:
            failures.append(f"g_{i} is not homogeneous")
    return failures


def specialize(C: ChartFamily, assignment) -> list[Poly]:
    """Generators over Q in x, y after substituting parameter values.

    ``assignment`` is a sequence aligned with ``C.params`` or a dict keyed by
    arrow triples.
    """
    if isinstance(assignment, dict):
        values = [Fraction(assignment[a.key]) for a in C.params]
    else:
        values = [Fraction(v) for v in assignment]
        if len(values) != C.d:
            raise ValueError(f"expected {C.d} parameter values, got {len(values)}")
    subst = {2 + k: v for k, v in enumerate(values)}
    return [fi.substitute(subst) for fi in C.f]


@dataclass(frozen=True)
class ChartReport:
    seed: int
    samples: int
    d: int
    failures: tuple[str, ...]
    assignments: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"seed": self.seed, "samples": self.samples, "d": self.d, "ok": self.ok,
                "failures": list(self.failures),
                "assignments": [list(a) for a in self.assignments]}


def verify_chart(C: ChartFamily, samples: int = 10, seed: int | None = None) -> ChartReport:
    """Symbolic checks, then random integer specializations in [-10, 10]."""
    seed = default_seed(seed)
    rng = random.Random(seed)
    failures = list(symbolic_checks(C))
    L = C.lexmost
    zero = specialize(C, [0] * C.d)
    if MonomialIdeal(next(iter(p.terms)) for p in zero) != L or any(len(p.terms) != 1 for p in zero):
        failures.append("zero specialization is not the lex-most ideal")
    assignments = [tuple(rng.randint(-10, 10) for _ in range(C.d)) for _ in range(samples)]
    bases = {}
    for values in assignments:
        gens = specialize(C, values)
        tag = f"sample {list(values)}"
        for a, b in zip(gens, gens[1:]):
            if groebner.reduce(groebner.s_polynomial(a, b, "lex"), gens, "lex"):
                failures.append(f"{tag}: adjacent S-polynomial does not reduce to zero")
                break
        G = groebner.buchberger(gens, "lex")
        initial = MonomialIdeal(groebner.leading_monomial(p, "lex") for p in G)
        if initial != L:
            failures.append(f"{tag}: lex initial ideal {initial} differs from {L}")
        if hilbert_function(initial, C.grading) != C.h:
            failures.append(f"{tag}: Hilbert function differs")
        bases[values] = frozenset(G)
    for a, b in combinations(bases, 2):
        if a != b and bases[a] == bases[b]:
            failures.append(f"samples {list(a)} and {list(b)} give the same ideal")
    return ChartReport(seed, samples, C.d, tuple(failures), tuple(assignments))
