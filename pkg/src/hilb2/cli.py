"""Command-line interface.

Inputs are JSON, given either inline or as a file path:

    hilb2 arrows --ideal '{"gens": [[4,0],[2,1],[0,2]]}'
    hilb2 poset --grading grading.json --hilbert h.json --dot poset.dot
    hilb2 factor --grading '{"free_rank":1,"deg_x":{"free":[1]},"deg_y":{"free":[-1]}}' \\
        --ideal '{"gens": [[4,3],[3,4],[2,5]]}'

Exit codes: 0 when every requested check passes, 1 when a check fails or a
computation is refused, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import chart, edge, poset, regression, tangent
from .arrows import all_arrows, arrows_json, significant
from .errors import Hilb2Error
from .grading import Grading
from .staircase import HilbertFunction, MonomialIdeal, hilbert_function


class InputError(Exception):
    """Malformed command-line input; reported with exit code 2."""


def load_json_arg(text: str, what: str):
    """Parse inline JSON, or read JSON from the named file."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        source, name = text, "<inline>"
    else:
        path = Path(text)
        if not path.is_file():
            raise InputError(f"{what}: no such file {text!r}")
        source, name = path.read_text(), text
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: {name} line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_grading(text: str | None) -> Grading:
    if text is None:
        return Grading.trivial()
    data = load_json_arg(text, "--grading")
    try:
        return Grading.from_json(data)
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"--grading: {exc}") from None


def parse_ideal(text: str) -> MonomialIdeal:
    data = load_json_arg(text, "--ideal")
    try:
        gens = data["gens"] if isinstance(data, dict) else data
        return MonomialIdeal(tuple(int(a) for a in gen) for gen in gens)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"--ideal: expected {{\"gens\": [[p, q], ...]}} ({exc})") from None


def parse_hilbert(text: str, g: Grading) -> HilbertFunction:
    data = load_json_arg(text, "--hilbert")
    try:
        h = HilbertFunction.from_json(data)
        for d, _ in h.entries:
            if len(d.free) != g.free_rank or len(d.torsion) != len(g.torsion_moduli):
                raise ValueError(f"degree {d.to_json()} does not match the grading")
            if g.reduce(d) != d:
                raise ValueError(f"torsion residue out of range in {d.to_json()}")
        return h
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"--hilbert: {exc}") from None


def parse_inputs(args) -> tuple[Grading, HilbertFunction | None, MonomialIdeal | None]:
    """Grading plus a Hilbert function, an ideal, or both (h is derived from the ideal)."""
    g = parse_grading(args.grading)
    M = parse_ideal(args.ideal) if getattr(args, "ideal", None) else None
    h = parse_hilbert(args.hilbert, g) if getattr(args, "hilbert", None) else None
    if h is None and M is not None and M.is_finite_colength:
        h = hilbert_function(M, g)
    return g, h, M


def parse_alpha(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(a) for a in text.replace(" ", "").strip("()[]").split(","))
    except ValueError:
        raise InputError(f"--alpha: expected i,u,v, got {text!r}") from None
    if len(parts) != 3:
        raise InputError(f"--alpha: expected i,u,v, got {text!r}")
    return parts


def parse_t(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--t: not a rational number: {text!r}") from None


def emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _need(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required for this command")
    return value


# -- commands ----------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    g, h, _ = parse_inputs(args)
    h = _need(h, "--hilbert or --ideal")
    emit(args, {"hilbert": h.to_json(), "ideals": [M.to_json() for M in poset.enumerate_ideals(h, g)]})
    return 0


def cmd_arrows(args) -> int:
    g, _, M = parse_inputs(args)
    emit(args, arrows_json(all_arrows(_need(M, "--ideal"), g)))
    return 0


def cmd_edge(args) -> int:
    g, _, M = parse_inputs(args)
    M = _need(M, "--ideal")
    alpha = parse_alpha(_need(args.alpha, "--alpha"))
    t = parse_t(args.t) if args.t else Fraction(1)
    E = edge.edge_ideal(M, alpha, t)
    emit(args, {
        **E.to_json(),
        "k": E.k, "ell": E.ell, "m": E.m, "sigma": E.sigma,
        "binomials_symbolic": [edge.format_binomial(b, t_symbol=True) for b in E.binomials()],
        "syzygies": [edge.syzygy_str(row) for row in edge.syzygies(E)],
        "initial_lex": edge.initial_ideal(E, "lex").to_json(),
        "initial_xel": edge.initial_ideal(E, "xel").to_json(),
    })
    return 0


def cmd_poset(args) -> int:
    g, h, _ = parse_inputs(args)
    P = poset.build_poset(_need(h, "--hilbert or --ideal"), g)
    if args.dot:
        dot = poset.to_dot(P)
        if args.dot == "-":
            sys.stdout.write(dot)
        else:
            Path(args.dot).write_text(dot)
        return 0
    data = P.to_json()
    data["maximal"] = [M.to_json() for M in P.maximal_elements()]
    emit(args, data)
    return 0


def cmd_lexmost(args) -> int:
    g, h, _ = parse_inputs(args)
    L = poset.lex_most(_need(h, "--hilbert or --ideal"), g)
    emit(args, {"lexmost": L.to_json(), "text": str(L)})
    return 0


def cmd_chain(args) -> int:
    g, _, M = parse_inputs(args)
    steps = poset.chain_to_lexmost(_need(M, "--ideal"), g)
    emit(args, {"start": M.to_json(), "steps": [s.to_json() for s in steps],
                "end": (steps[-1].target if steps else M).to_json()})
    return 0


def cmd_tangent(args) -> int:
    g, _, M = parse_inputs(args)
    M = _need(M, "--ideal")
    alpha = parse_alpha(args.alpha) if args.alpha else None
    ts = [parse_t(t) for t in args.t] if args.t else list(tangent.SPECIAL_T)
    report = tangent.dimension_report(M, g, alpha, ts=ts)
    T = tangent.build_system(M, g, alpha, None)
    count = len(significant(M, g))
    leading_ok = True
    try:
        tangent.check_leading_variables(T)
    except Hilb2Error:
        leading_ok = False
    checks = {
        "dimensions_agree": report.consistent,
        "dimension_equals_significant_arrows": report.dimension == count,
        "leading_variables": leading_ok,
    }
    if args.dump:
        Path(args.dump).write_text(json.dumps(T.to_json(), indent=2) + "\n")
    lines = [f"r = {T.r}", f"rank = {T.r - report.dimension}", f"dimension = {report.dimension}",
             f"|T(M)| = {count}"]
    lines += [f"dimension at t = {t}: {d}" for t, d in report.by_t.items()]
    lines += [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in checks.items()]
    emit(args, "\n".join(lines) + "\n")
    return 0 if all(checks.values()) else 1


def cmd_chart(args) -> int:
    g, h, _ = parse_inputs(args)
    C = chart.build_chart(_need(h, "--hilbert or --ideal"), g)
    report = chart.verify_chart(C, args.samples, args.seed)
    if args.json:
        Path(args.json).write_text(json.dumps({**C.to_json(), "report": report.to_json()}, indent=2) + "\n")
    names = C.names()
    lines = [f"L = {C.lexmost}", f"d = {C.d}"]
    lines += [f"f_{i} = {f.to_str(names)}" for i, f in enumerate(C.f)]
    lines.append(f"seed = {report.seed}, samples = {report.samples}")
    lines += [f"FAIL: {msg}" for msg in report.failures] or ["verification: pass"]
    emit(args, "\n".join(lines) + "\n")
    return 0 if report.ok else 1


def cmd_factor(args) -> int:
    g, _, M = parse_inputs(args)
    emit(args, regression.factor_report(_need(M, "--ideal"), g) + "\n")
    return 0


def cmd_verify_paper(args) -> int:
    results = regression.run_corpus()
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}")
        lines += [f"    {msg}" for msg in r.failures]
    emit(args, "\n".join(lines) + "\n")
    return 0 if all(r.ok for r in results) else 1


# -- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilb2", description="Monomial ideals, edge degenerations and tangent spaces "
        "for multigraded Hilbert schemes of the plane.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str, ideal=False, hilbert=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--grading", help="grading JSON (inline or file); default: zero group")
        if ideal:
            p.add_argument("--ideal", help='monomial ideal JSON, e.g. {"gens": [[2,0],[0,1]]}')
        if hilbert:
            p.add_argument("--hilbert", help="Hilbert function JSON (inline or file)")
        p.add_argument("--output", "-o", help="write output here instead of stdout")
        p.set_defaults(func=fn)
        return p

    add("enumerate", cmd_enumerate, "monomial ideals with a Hilbert function", ideal=True, hilbert=True)
    add("arrows", cmd_arrows, "classified arrows of a monomial ideal", ideal=True)
    p = add("edge", cmd_edge, "edge ideal of a positive significant arrow", ideal=True)
    p.add_argument("--alpha", help="arrow as i,u,v")
    p.add_argument("--t", help="value of the parameter t (default 1)")
    p = add("poset", cmd_poset, "poset of monomial ideals with a Hilbert function", ideal=True, hilbert=True)
    p.add_argument("--dot", help="write Graphviz DOT to this file ('-' for stdout)")
    add("lexmost", cmd_lexmost, "maximum of the poset", ideal=True, hilbert=True)
    add("chain", cmd_chain, "edge-ideal chain from an ideal up to the maximum", ideal=True)
    p = add("tangent", cmd_tangent, "tangent space dimension and consistency checks", ideal=True)
    p.add_argument("--alpha", help="positive significant arrow i,u,v (default: at M itself)")
    p.add_argument("--t", action="append", help="value of t to test (repeatable)")
    p.add_argument("--dump", help="write the linear system as JSON to this file")
    p = add("chart", cmd_chart, "parametrized family through the lex-most ideal", ideal=True, hilbert=True)
    p.add_argument("--samples", type=int, default=10, help="random specializations to check")
    p.add_argument("--seed", type=int, help="RNG seed (default: $HILB2_SEED or built-in)")
    p.add_argument("--json", help="write the family and report as JSON to this file")
    add("factor", cmd_factor, "split off the gcd of the generators", ideal=True)
    p = sub.add_parser("verify-paper", help="run the bundled corpus of worked examples")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"hilb2: error: {exc}", file=sys.stderr)
        return 2
    except Hilb2Error as exc:
        print(f"hilb2: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
