"""Run the bundled corpus of worked examples.

Each JSON file under ``corpus/`` names a ``check`` and pairs inputs with
expected outputs.  A checker returns a list of mismatch messages; an empty
list means the entry passed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import edge, tangent
from .arrows import ArrowClass, all_arrows
from .grading import Grading
from .poset import build_poset, chain_to_lexmost, lex_most_of, partitions
from .staircase import (
    HilbertFunction,
    MonomialIdeal,
    classify_principal_factor,
    factor_gcd,
    hilbert_function,
)


def load_corpus() -> list[dict]:
    files = sorted(f for f in resources.files("hilb2").joinpath("corpus").iterdir()
                   if f.name.endswith(".json"))
    return [json.loads(f.read_text()) for f in files]


def _keys(arrows) -> set[tuple[int, int, int]]:
    return {tuple(a) for a in arrows}


def _terms(raw: list[dict]) -> dict:
    return {tuple(t["var"]): tuple(t["coeff_t_poly"]) for t in raw}


def check_arrows(entry: dict, g: Grading) -> list[str]:
    M = MonomialIdeal.from_json(entry["ideal"])
    exp = entry["expected"]
    arrows = all_arrows(M, g)
    got = {
        "nonnegative": {a.key for a in arrows if a.cls in (ArrowClass.POSITIVE, ArrowClass.NONNEG)},
        "nonpositive": {a.key for a in arrows if a.cls is ArrowClass.NONPOS},
        "positive": {a.key for a in arrows if a.cls is ArrowClass.POSITIVE},
        "insignificant": {a.key for a in arrows if not a.significant},
    }
    out = [f"{name}: got {sorted(got[name])}" for name in got if got[name] != _keys(exp[name])]
    if len(arrows) != exp["r"]:
        out.append(f"r: got {len(arrows)}, expected {exp['r']}")
    return out


def check_edge(entry: dict, g: Grading) -> list[str]:
    M = MonomialIdeal.from_json(entry["ideal"])
    exp = entry["expected"]
    E = edge.edge_ideal(M, tuple(entry["alpha"]), 1)
    out = []
    for name in ("k", "ell", "m", "sigma"):
        if getattr(E, name) != exp[name]:
            out.append(f"{name}: got {getattr(E, name)}, expected {exp[name]}")
    got_bin = [[list(b.lead), list(b.tail) if b.tail else None] for b in E.binomials()]
    if got_bin != exp["binomials"]:
        out.append(f"binomials: got {got_bin}")
    got_syz = [[[term.coeff, term.t_power, list(term.mono), term.index] for term in row]
               for row in edge.syzygies(E)]
    if [sorted(map(str, r)) for r in got_syz] != [sorted(map(str, r)) for r in exp["syzygies"]]:
        out.append(f"syzygies: got {got_syz}")
    for t in exp.get("xel_initial_t", []):
        if edge.initial_ideal(edge.edge_ideal(M, E.alpha, Fraction(t)), "xel") != M:
            out.append(f"xel initial ideal at t={t} differs from M")
    if "lex_initial" in exp:
        want = MonomialIdeal.from_json(exp["lex_initial"])
        for t in exp.get("lex_initial_t", [1]):
            got = edge.initial_ideal(edge.edge_ideal(M, E.alpha, Fraction(t)), "lex")
            if got != want:
                out.append(f"lex initial ideal at t={t}: got {got}")
    return out


def check_tangent(entry: dict, g: Grading) -> list[str]:
    M = MonomialIdeal.from_json(entry["ideal"])
    exp = entry["expected"]
    T = tangent.build_system(M, g, tuple(entry["alpha"]))
    out = []
    if len(T.equations) != exp["equation_count"]:
        out.append(f"equation count {len(T.equations)}")
    for e in exp["equations"]:
        got = T.equation(*e["label"]).terms
        if got != _terms(e["terms"]):
            out.append(f"F{tuple(e['label'])}: got {T.equation(*e['label']).to_str()}")
    if "reduced_labels" in exp:
        got = [list(e.label) for e in tangent.reduced_system(T).equations]
        if sorted(got) != sorted(exp["reduced_labels"]):
            out.append(f"reduced system labels {got}")
    for rel in exp.get("relations", []):
        listed = [(p, tuple(lab)) for p, lab in rel["terms"]
                  if (lab[1], lab[2]) not in M]
        got = tangent.relation_terms(T, *rel["label"])
        if sorted(got) != sorted(listed):
            out.append(f"relation {rel['label']}: terms {got}")
        if tangent.combine(T, listed):
            out.append(f"relation {rel['label']} does not vanish")
    report = tangent.dimension_report(M, g, T.alpha, ts=exp.get("t_values", tangent.SPECIAL_T))
    if not report.consistent:
        out.append(f"dimensions disagree: {report}")
    if "dimension" in exp and report.dimension != exp["dimension"]:
        out.append(f"dimension {report.dimension}, expected {exp['dimension']}")
    if "r" in exp and T.r != exp["r"]:
        out.append(f"r = {T.r}, expected {exp['r']}")
    return out


def check_poset(entry: dict, g: Grading) -> list[str]:
    h = HilbertFunction.from_json(entry["hilbert"])
    exp = entry["expected"]
    P = build_poset(h, g)
    out = []
    if len(P.elements) != exp["count"]:
        out.append(f"poset has {len(P.elements)} elements")
    if "colength_six_total" in exp and sum(1 for _ in partitions(h.total)) != exp["colength_six_total"]:
        out.append("wrong number of monomial ideals of this colength")
    uppers = {b for _, b in P.hasse_edges}
    lowers = {a for a, _ in P.hasse_edges}
    tops = [i for i in range(len(P.elements)) if i not in lowers]
    bottoms = [i for i in range(len(P.elements)) if i not in uppers]
    if len(tops) != exp["tops"] or len(bottoms) != exp["bottoms"]:
        out.append(f"tops {tops}, bottoms {bottoms}")
    return out


def lex_segment_witness(M: MonomialIdeal, g: Grading, big, small) -> bool:
    """True if big >lex small have equal degree, small lies in M and big does not."""
    return (tuple(big) > tuple(small) and g.degree_of(*big) == g.degree_of(*small)
            and tuple(small) in M and tuple(big) not in M)


def check_lexmost(entry: dict, g: Grading) -> list[str]:
    M = MonomialIdeal.from_json(entry["ideal"])
    exp = entry["expected"]
    h = hilbert_function(M, g)
    out = []
    if "hilbert_values" in exp:
        got = sorted([list(d.torsion) + list(d.free), k] for d, k in h.entries)
        if got != sorted(exp["hilbert_values"]):
            out.append(f"Hilbert function {got}")
    chain = [MonomialIdeal.from_json(c) for c in exp["chain"]]
    P = build_poset(h, g)
    if sorted(P.elements, key=lambda I: I.gens) != sorted(chain, key=lambda I: I.gens):
        out.append(f"elements {[str(I) for I in P.elements]}")
        return out
    top = lex_most_of(P)
    if top != chain[0]:
        out.append(f"maximum {top}")
    idx = {I: P.elements.index(I) for I in chain}
    for upper, lower in zip(chain, chain[1:]):
        if not P.relations[idx[upper]][idx[lower]] or P.relations[idx[lower]][idx[upper]]:
            out.append(f"{upper} does not strictly dominate {lower}")
    steps = chain_to_lexmost(chain[-1], g)
    if steps and steps[-1].target != top:
        out.append("edge chain does not end at the maximum")
    if "not_lex_segment_witness" in exp:
        big, small = exp["not_lex_segment_witness"]
        if not lex_segment_witness(top, g, big, small):
            out.append("lex-segment witness fails")
    return out


def factor_report(M: MonomialIdeal, g: Grading) -> str:
    (a, b), Q = factor_gcd(M)
    return f"X = {classify_principal_factor(a, b, g)}, Q = {Q}"


def check_factor(entry: dict, g: Grading) -> list[str]:
    M = MonomialIdeal.from_json(entry["ideal"])
    exp = entry["expected"]
    (a, b), Q = factor_gcd(M)
    out = []
    if [a, b] != exp["gcd"] or Q != MonomialIdeal.from_json(exp["quotient"]):
        out.append(f"factorization ({a}, {b}), {Q}")
    if str(classify_principal_factor(a, b, g)) != exp["space"]:
        out.append(f"space {classify_principal_factor(a, b, g)}")
    if factor_report(M, g) != exp["report"]:
        out.append(f"report {factor_report(M, g)!r}")
    return out


CHECKERS = {
    "arrows": check_arrows,
    "edge": check_edge,
    "tangent": check_tangent,
    "poset": check_poset,
    "lexmost": check_lexmost,
    "factor": check_factor,
}


@dataclass(frozen=True)
class CorpusResult:
    name: str
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def run_entry(entry: dict) -> CorpusResult:
    g = Grading.from_json(entry["grading"])
    try:
        failures = CHECKERS[entry["check"]](entry, g)
    except Exception as exc:  # report, keep going with the other entries
        failures = [f"{type(exc).__name__}: {exc}"]
    return CorpusResult(entry["name"], tuple(failures))


def run_corpus() -> list[CorpusResult]:
    return [run_entry(e) for e in load_corpus()]

