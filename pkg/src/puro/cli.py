"""Command line interface: `puro <subcommand> ...`."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import census, level, simplicial
from .macaulay import first_violation, is_o_sequence
from .monomials import ParseError, format_monomial, load_generators, parse_generator_lines
from .purity import BudgetExceeded, MalformedSequence, decide_pure, enumerate_pure
from .reproduce import EXAMPLES, UnknownExampleId, reproduce
from .search import SearchBudget
from .sequences import brown_colbourn, growth_bound_check, parse_sequence, shape

log = logging.getLogger("puro")


class UsageError(Exception):
    pass


# output

def _flat(value):
    if isinstance(value, (list, tuple)):
        return ",".join(_flat(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return "-"
    return str(value).lower() if isinstance(value, bool) else str(value)


def emit(data, fmt: str, stream=None):
    """Print a dict or a list of dicts in the chosen format."""
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(data, sort_keys=True, default=str) + "\n")
        return
    rows = data if isinstance(data, list) else [data]
    if fmt == "tsv":
        keys = list(rows[0].keys()) if rows else []
        stream.write("\t".join(keys) + "\n")
        for row in rows:
            stream.write("\t".join(_flat(row.get(k)) for k in keys) + "\n")
        return
    for i, row in enumerate(rows):
        if i:
            stream.write("\n")
        width = max((len(k) for k in row), default=0)
        for k, v in row.items():
            stream.write(f"{k.ljust(width)}  {_flat(v)}\n")


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _seq(text):
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_chars(text: str):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "auto":
            out.append("auto")
        elif tok:
            try:
                out.append(int(tok))
            except ValueError:
                raise UsageError(f"bad characteristic {tok!r}") from None
    return out


# subcommands

def cmd_check(args):
    h = _seq(args.sequence)
    rep = shape(h).__dict__.copy()
    rep = {"sequence": list(h), **rep}
    rep["is_o_sequence"] = is_o_sequence(h)
    rep["o_sequence_violation"] = first_violation(h)
    rep["growth_bound_violation"] = growth_bound_check(h) if len(h) > 2 else None
    emit(rep, args.format)
    return 0


def cmd_decide(args):
    budget = _budget(args)
    rows = []
    for text in args.sequences:
        try:
            v = decide_pure(_seq(text), budget, theorems=not args.no_theorems,
                            fast_paths=not args.no_fast_paths, constructions=not args.no_constructions)
        except MalformedSequence as exc:
            raise UsageError(str(exc)) from None
        rows.append({"sequence": text, **v.to_dict()})
    emit(rows if len(rows) > 1 else rows[0], args.format)
    return 0


def cmd_enumerate(args):
    try:
        found = enumerate_pure(args.r, args.e, args.type, _budget(args), checkpoint=args.checkpoint)
        complete = True
    except BudgetExceeded as exc:
        found, complete = exc.partial, False
        log.warning("%s", exc)
    rows = [{"sequence": list(h)} for h in sorted(found)]
    if args.format == "json":
        emit({"r": args.r, "e": args.e, "type": args.type, "complete": complete,
              "count": len(rows), "sequences": [r["sequence"] for r in rows]}, "json")
    elif rows:
        emit(rows, args.format)
    return 0 if complete else 3


def cmd_icp(args):
    budget = _budget(args)
    if args.box:
        e, bound = args.box
        _, violations, unresolved = census.icp_box(e, bound, budget, args.threads)
        emit({"socle_degree": e, "bound": bound, "slices_with_gaps": len(violations),
              "unresolved": unresolved,
              "gaps": [{"template": _flat([("*" if x is None else x) for x in v.template]), "gaps": v.gaps}
                       for v in violations]}, args.format if args.format == "json" else "pretty")
        return 0
    if not args.slice:
        raise UsageError("give --box E BOUND or --slice TEMPLATE --values LO HI")
    template = tuple(None if tok.strip() == "*" else int(tok) for tok in args.slice.split(","))
    if template.count(None) != 1:
        raise UsageError("the slice template needs exactly one '*'")
    lo, hi = args.values
    res = census.icp_scan(template, range(lo, hi + 1), budget, args.threads)
    emit({"template": args.slice, "pure_values": res.pure_values, "gaps": res.gaps,
          "unresolved": res.unresolved}, args.format)
    return 0


def _algebra(args):
    if bool(args.inverse_system) == bool(args.ideal):
        raise UsageError("give exactly one of --inverse-system or --ideal")
    text = args.inverse_system or args.ideal
    try:
        if os.path.exists(text):
            gens = load_generators(text, args.vars)
        else:
            gens = parse_generator_lines(text.split(), args.vars)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    n = args.vars or len(gens[0])
    try:
        if args.inverse_system:
            return level.from_inverse_system(gens, n)
        return level.from_monomial_ideal(gens, n)
    except level.MixedDegrees as exc:
        raise UsageError(str(exc)) from None


def cmd_wlp(args):
    A = _algebra(args)
    chars = _parse_chars(args.chars)
    rep = level.lefschetz_report(A, args.power, chars)
    emit(rep.to_dict(), args.format)
    return 0


def cmd_slp(args):
    A = _algebra(args)
    rep = level.slp_report(A, [c for c in _parse_chars(args.chars) if c != "auto"] or [0])
    out = rep.to_dict()
    if args.format != "json":
        out = {"hilbert": out["hilbert"], "slp_char0": out["slp_char0"],
               "first_failure": out["first_failure"],
               **{f"L^{r['power']}": " ".join(f"{d}:{k}/{t}" for d, k, t in r["ranks"]) for r in out["by_power"]}}
    emit(out, args.format)
    return 0


def cmd_type2(args):
    try:
        a, b = parse_generator_lines([args.a, args.b])
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    out = {"a": format_monomial(a), "b": format_monomial(b)}
    try:
        out["hilbert"] = list(level.type2_hilbert(a, b))
    except level.DegreeMismatch as exc:
        raise UsageError(str(exc)) from None
    if len(a) == 3 and a != b:
        cls = level.classify_type2_3vars(a, b)
        out["case"] = cls.case
        out["params"] = cls.params
    A = level.from_inverse_system([a, b] if a != b else [a])
    rep = level.wlp_report(A, chars=(0,))
    out["wlp_char0"] = rep.wlp_char0
    if args.square:
        sq = level.lefschetz_report(A, 2, chars=(0,))
        out["square_max_rank"] = sq.wlp_char0
    emit(out, args.format)
    return 0


def cmd_fvector(args):
    if args.type2:
        e, h = args.type2
        f = simplicial.pure_f_type2(e, h)
        emit({"f": list(f.entries), "h": list(simplicial.f_to_h(f)), "cm": simplicial.is_cm(f),
              "chain_holds": simplicial.type2_inequality_check(f)}, args.format)
        return 0
    if args.facets:
        facets = simplicial.load_facets(args.facets)
        f = simplicial.f_vector_of_facets(facets)
        emit({"f": list(f.entries), "h": list(simplicial.f_to_h(f)), "cm": simplicial.is_cm(f)}, args.format)
        return 0
    if args.plane:
        emit({"order": args.plane, "sequence": list(simplicial.projective_plane_sequence(args.plane))}, args.format)
        return 0
    if args.steiner:
        s = simplicial.steiner_extremal(args.steiner)
        emit(s.__dict__, args.format)
        return 0
    if args.interval:
        f, g = (_seq(x) for x in args.interval)
        try:
            res = simplicial.cm_interval_check(f, g)
        except simplicial.NotCM as exc:
            raise UsageError(str(exc)) from None
        emit({"slot": res.slot, "checked": res.checked, "holds": res.holds,
              "non_cm": [list(x) for x in res.non_cm]}, args.format)
        return 0
    if args.f:
        f = _seq(args.f)
        emit({"f": list(f), "h": list(simplicial.f_to_h(f)), "cm": simplicial.is_cm(f),
              "chain_holds": simplicial.type2_inequality_check(f)}, args.format)
        return 0
    raise UsageError("fvector needs one of --f, --type2, --facets, --plane, --steiner, --interval")


def cmd_census(args):
    budget = _budget(args)
    if args.kind == "chain":
        c = census.count_chain(args.r, args.e, budget, args.threads)
        emit({"r": c.r, "e": c.e, "O_prev": c.o_prev_count, "D": c.d_count, "P": c.p_count, "O": c.o_count,
              "unresolved": c.unresolved, "chain_holds": c.chain_holds,
              "c_e": str(census.asymptotic_constant(args.e))}, args.format)
    elif args.kind == "socle3":
        res = census.socle3_region_census(args.t, budget, exhaustive=args.exhaustive or None, threads=args.threads)
        emit({"t": res.t, "total": res.total, "regions": res.regions, "closed_form": res.closed_form,
              "unresolved": [list(p) for p in res.unresolved]}, args.format)
    elif args.kind == "socle2":
        emit({"r": args.r, "pure_count": census.socle2_pure_count(args.r)}, args.format)
    elif args.kind == "answernd":
        rows = []
        for r in range(1, args.max_r + 1):
            for d in range(1, args.max_d + 1):
                cell = level.answernd_check(r, d, samples=args.samples, seed=args.seed)
                rows.append({"r": r, "d": d, "always_wlp": cell.always, "witness": cell.witness,
                             "hilbert": list(cell.hilbert) if cell.hilbert else None, "witness_fails": cell.fails,
                             "samples": cell.samples, "sample_failures": cell.sample_failures})
        emit(rows, args.format)
    elif args.kind == "brown-colbourn":
        h = _seq(args.sequence)
        alphas = [Fraction(a) for a in args.alphas.split(",")]
        emit([{"alpha": str(a), "holds": brown_colbourn(h, a)} for a in alphas], args.format)
    return 0


def cmd_reproduce(args):
    if args.list:
        for name in EXAMPLES:
            print(name)
        return 0
    names = list(EXAMPLES) if args.all else args.ids
    if not names:
        raise UsageError("give example ids, --all or --list")
    bad = 0
    rows = []
    for name in names:
        out = reproduce(name)
        bad += not out.ok
        rows.append({"id": out.id, "ok": out.ok, "seconds": round(out.seconds, 3), "details": out.details})
    if args.format == "json":
        emit(rows, "json")
    else:
        for row in rows:
            print(f"{'PASS' if row['ok'] else 'FAIL'} {row['id']} ({row['seconds']:.2f}s)")
            for d in row["details"]:
                print(f"    {d}")
    return 1 if bad else 0


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global flags; SUPPRESS keeps a value given before the subcommand
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv", "pretty"], default=d("pretty"))
    common.add_argument("--budget-nodes", type=int, default=d(5_000_000))
    common.add_argument("--budget-seconds", type=float, default=d(120.0))
    common.add_argument("--threads", type=int, default=d(os.cpu_count() or 1))
    common.add_argument("--seed", type=int, default=d(0))
    common.add_argument("--chars", default=d("0,auto"), help="comma list of 0, primes and/or auto")
    common.add_argument("-v", "--verbose", action="store_true", default=d(False), help="progress on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    top = _common_flags(suppress=False)
    common = _common_flags(suppress=True)

    p = argparse.ArgumentParser(prog="puro", description="Pure O-sequences and monomial level algebras.",
                                parents=[top])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="shape report for a sequence")
    s.add_argument("sequence")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decide", parents=[common], help="is a sequence a pure O-sequence")
    s.add_argument("sequences", nargs="+")
    s.add_argument("--no-theorems", action="store_true")
    s.add_argument("--no-fast-paths", action="store_true")
    s.add_argument("--no-constructions", action="store_true")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("enumerate", parents=[common], help="all pure O-sequences with given r, e")
    s.add_argument("r", type=int)
    s.add_argument("e", type=int)
    s.add_argument("--type", type=int)
    s.add_argument("--checkpoint")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("icp", parents=[common], help="interval property scans")
    s.add_argument("--box", nargs=2, type=int, metavar=("E", "BOUND"))
    s.add_argument("--slice", help="template such as 1,3,*,4")
    s.add_argument("--values", nargs=2, type=int, metavar=("LO", "HI"), default=(1, 12))
    s.set_defaults(func=cmd_icp)

    for name, func in (("wlp", cmd_wlp), ("slp", cmd_slp)):
        s = sub.add_parser(name, parents=[common], help=f"{name.upper()} rank report")
        s.add_argument("--inverse-system", help="generators (space separated) or a file")
        s.add_argument("--ideal", help="monomial ideal generators (space separated) or a file")
        s.add_argument("--vars", type=int)
        if name == "wlp":
            s.add_argument("--power", type=int, default=1)
        s.set_defaults(func=func)

    s = sub.add_parser("type2", parents=[common], help="type 2 algebra from two monomials")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--square", action="store_true", help="also test x L^2 for maximal rank")
    s.set_defaults(func=cmd_type2)

    s = sub.add_parser("fvector", parents=[common], help="f-vector tools")
    s.add_argument("--f")
    s.add_argument("--type2", nargs=2, type=int, metavar=("E", "H"))
    s.add_argument("--facets")
    s.add_argument("--plane", type=int)
    s.add_argument("--steiner", type=int)
    s.add_argument("--interval", nargs=2, metavar=("F", "G"))
    s.set_defaults(func=cmd_fvector)

    s = sub.add_parser("census", parents=[common], help="counts and classification grids")
    s.add_argument("kind", choices=["chain", "socle3", "socle2", "answernd", "brown-colbourn"])
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--e", type=int, default=3)
    s.add_argument("--t", type=int, default=4)
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--max-r", type=int, default=5)
    s.add_argument("--max-d", type=int, default=4)
    s.add_argument("--samples", type=int, default=20)
    s.add_argument("--sequence", default="1,2,1")
    s.add_argument("--alphas", default="1,3/2,2")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("reproduce", parents=[common], help="regenerate named examples against fixtures")
    s.add_argument("ids", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UnknownExampleId as exc:
        print(f"puro: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"puro: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
