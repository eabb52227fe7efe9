"""Command-line surface: build, transform, decide, enumerate, and render.

Exit codes: 0 the queried property holds (or the command simply succeeded),
1 it does not hold, 2 malformed input (bad flags or unparseable files, with
a line-numbered diagnostic), 3 a resource cap was exhausted.

The first output line of every decision verb is machine-parsable:
``verdict: <yes|no|finite|infinite|value p/q>``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import arith, decide, gallery
from .automaton import Automaton, AutomatonFormatError, ResourceCapError
from .compare import RELATIONS, compare_automaton
from .oracle import enumerate_quotients
from .words import as_ratio, ratio_str

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3


def _load(path: str) -> Automaton:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return Automaton.from_text(fh.read())
    except OSError as e:
        raise AutomatonFormatError(f"{path}: {e}") from e
    except AutomatonFormatError as e:
        raise AutomatonFormatError(f"{path}: {e}") from e


def _write(a: Automaton, path: str, dot: str | None = None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(a.to_text())
    print(f"written: {path}")
    if dot:
        with open(dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(a.to_dot())
        print(f"dot: {dot}")


def _cmd_compare(args) -> int:
    a = compare_automaton(args.k, as_ratio(args.beta), args.rel)
    _write(a, args.out, args.dot)
    return EXIT_HOLDS


def _cmd_arith(args) -> int:
    a = _load(getattr(args, "in"))
    if args.op == "union":
        if not args.in2:
            raise SystemExit2("--in2 is required for union")
        out = arith.union_sets(a, _load(args.in2))
    elif args.op == "recip":
        out = arith.reciprocal(a)
    else:
        if args.alpha is None:
            raise SystemExit2(f"--alpha is required for {args.op}")
        alpha = as_ratio(args.alpha)
        if args.op == "add":
            out = arith.shift_add(a, alpha)
        elif args.op == "sub":
            out = arith.shift_sub(a, alpha)
        elif args.op == "subfrom":
            out = arith.sub_from(alpha, a)
        elif args.op == "scale":
            out = arith.scale(a, alpha)
        else:
            raise SystemExit2(f"unknown op {args.op}")
    _write(out, args.out, args.dot)
    return EXIT_HOLDS


class SystemExit2(Exception):
    """Bad invocation surfaced with exit code 2."""


def _cmd_decide(args) -> int:
    a = _load(getattr(args, "in"))
    cap = args.cap if args.cap else decide.DEFAULT_NODE_CAP
    sub = args.question
    if sub == "infinite":
        infinite, members = decide.is_quoset_infinite(a, node_cap=cap,
                                                      max_candidates=cap)
        if infinite:
            print("verdict: infinite")
            return EXIT_HOLDS
        print("verdict: finite")
        print("quoset: " + " ".join(ratio_str(x) for x in sorted(members)))
        return EXIT_FAILS
    if sub == "member":
        ok, w = decide.exists_rel(a, _need_x(args), "eq")
        print("verdict: yes" if ok else "verdict: no")
        if w is not None:
            print(f"witness: {w}")
        return EXIT_HOLDS if ok else EXIT_FAILS
    if sub == "subset-nat":
        verdict = decide.is_subset_of_naturals(a, node_cap=cap)
        if verdict.answer:
            print("verdict: yes")
            out = args.out or (getattr(args, "in") + ".m2.aut")
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(verdict.m2.to_text())
            print(f"m2: {out}")
            return EXIT_HOLDS
        print("verdict: no")
        if verdict.witness is not None:
            print(f"witness: {verdict.witness}")
        print(f"step: {verdict.failed_step}")
        return EXIT_FAILS
    if sub in ("subset", "equal"):
        if not args.nat:
            raise SystemExit2("--nat is required for subset/equal")
        nat = _load(args.nat)
        fn = decide.quo_subset_of if sub == "subset" else decide.quo_equals
        ok = fn(a, nat, node_cap=cap)
        print("verdict: yes" if ok else "verdict: no")
        return EXIT_HOLDS if ok else EXIT_FAILS
    if sub == "accpoint":
        ok = decide.is_accumulation_point(a, _need_x(args), node_cap=cap)
        print("verdict: yes" if ok else "verdict: no")
        return EXIT_HOLDS if ok else EXIT_FAILS
    if sub in ("sup", "inf"):
        if decide.quoset_is_empty(a):
            print("verdict: no")
            print("note: empty quotient set")
            return EXIT_FAILS
        if sub == "sup":
            val = decide.sup_quoset(a, node_cap=cap)
            if val is None:
                print("verdict: infinite")
                return EXIT_HOLDS
        else:
            val = decide.inf_quoset(a, node_cap=cap)
        print(f"verdict: value {ratio_str(val)}")
        return EXIT_HOLDS
    if sub == "smallrep":
        w = decide.find_small_representation(a, _need_x(args))
        if w is None:
            print("verdict: no")
            return EXIT_FAILS
        print("verdict: yes")
        print(f"witness: {w}")
        print(f"length: {len(w)}")
        return EXIT_HOLDS
    raise SystemExit2(f"unknown decide question {sub!r}")


def _need_x(args) -> Fraction:
    if args.x is None:
        raise SystemExit2("--x <p/q> is required here")
    return as_ratio(args.x)


def _cmd_oracle(args) -> int:
    a = _load(getattr(args, "in"))
    budget = args.cap if args.cap else 10**7
    report = enumerate_quotients(a, args.maxlen, budget=budget)
    for value, count in report.table_rows():
        print(f"{ratio_str(value)}\t{count}")
    if args.plot:
        from .report import save_report_plot
        save_report_plot(report, args.plot)
        print(f"plot: {args.plot}")
    if args.value is not None:
        found = as_ratio(args.value) in report.counts
        print(f"value: {'yes' if found else 'no-up-to-bound'}")
        return EXIT_HOLDS if found else EXIT_FAILS
    return EXIT_HOLDS


def _cmd_gallery(args) -> int:
    if args.list:
        for name in gallery.names():
            print(name)
        return EXIT_HOLDS
    if not args.name:
        raise SystemExit2("--name or --list is required")
    entry = gallery.build(args.name, args.k)
    if not args.out:
        raise SystemExit2("--out is required with --name")
    _write(entry.automaton, args.out, args.dot)
    print(f"description: {entry.description}")
    return EXIT_HOLDS


def _cmd_density(args) -> int:
    if args.name:
        a = gallery.build(args.name, args.k).automaton
    elif getattr(args, "in"):
        a = _load(getattr(args, "in"))
    else:
        raise SystemExit2("--name or --in is required")
    rows = gallery.density_table(a, args.which, args.nmax)
    lines = [f"{n}\t{c}" for n, c in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"written: {args.out}")
    else:
        sys.stdout.write(text)
    if args.plot:
        from .report import save_density_plot
        save_density_plot(rows, args.plot)
        print(f"plot: {args.plot}")
    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ratset",
        description="automata over digit-pair alphabets and their exact "
                    "quotient-set decision procedures")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compare", help="build a comparison automaton")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--beta", required=True)
    c.add_argument("--rel", choices=RELATIONS, required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--dot")

    a = sub.add_parser("arith", help="arithmetic transform of a quotient set")
    a.add_argument("--op", choices=("add", "sub", "subfrom", "scale", "recip",
                                    "union"), required=True)
    a.add_argument("--alpha")
    a.add_argument("--in", required=True)
    a.add_argument("--in2")
    a.add_argument("--out", required=True)
    a.add_argument("--dot")

    d = sub.add_parser("decide", help="decision procedures")
    d.add_argument("question", choices=("infinite", "member", "subset-nat",
                                        "subset", "equal", "accpoint", "sup",
                                        "inf", "smallrep"))
    d.add_argument("--in", required=True)
    d.add_argument("--x")
    d.add_argument("--nat")
    d.add_argument("--out")
    d.add_argument("--cap", type=int)

    o = sub.add_parser("oracle", help="exhaustive enumeration census")
    o.add_argument("--in", required=True)
    o.add_argument("--maxlen", type=int, required=True)
    o.add_argument("--value")
    o.add_argument("--plot")
    o.add_argument("--cap", type=int)

    g = sub.add_parser("gallery", help="write a named example automaton")
    g.add_argument("--name")
    g.add_argument("--k", type=int)
    g.add_argument("--out")
    g.add_argument("--dot")
    g.add_argument("--list", action="store_true")

    y = sub.add_parser("density", help="projection word-count table")
    y.add_argument("--name")
    y.add_argument("--k", type=int)
    y.add_argument("--in", dest="in")
    y.add_argument("--which", type=int, choices=(1, 2), required=True)
    y.add_argument("--nmax", type=int, required=True)
    y.add_argument("--out")
    y.add_argument("--plot")

    return p


_COMMANDS = {"compare": _cmd_compare, "arith": _cmd_arith,
             "decide": _cmd_decide, "oracle": _cmd_oracle,
             "gallery": _cmd_gallery, "density": _cmd_density}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse uses code 2 for usage errors already
        return int(e.code) if e.code else 0
    try:
        return _COMMANDS[args.verb](args)
    except SystemExit2 as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (AutomatonFormatError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ResourceCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
