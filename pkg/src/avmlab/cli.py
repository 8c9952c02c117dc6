"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 malformed input, 4 verification
failure.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext

from .errors import AvmlabError, GraphError, InfeasibleSpec, OutOfRange
from .formats import read_graphs, to_dot, to_graph6, format_edgelist
from .generators import FAMILIES, FamilySpec, all_bicyclic, build
from .matching import distribution, enumerate_maximal
from .structure import attachment_profile, classify, core_names
from . import verify

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


def approx(frac, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(frac.numerator) / Decimal(frac.denominator))


def _load(args):
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {args.input}: {exc.strerror}") from exc
    return read_graphs(text, getattr(args, "format", None))


def cmd_compute(args, out):
    for i, g in enumerate(_load(args)):
        if i:
            out.write("\n")
        d = distribution(g)
        out.write(f"m={d.m} m'={d.m_prime} avm={d.avm}\n")
        out.write(f"avm~{approx(d.avm)} (approximate)\n")
        for size, count in enumerate(d.counts):
            if count:
                out.write(f"size {size}: {count}\n")
    return 0


def cmd_enumerate(args, out):
    for i, g in enumerate(_load(args)):
        if i:
            out.write("\n")
        for matching in enumerate_maximal(g):
            out.write(" ".join(f"{u}-{v}" for u, v in matching) + "\n")
    return 0


def describe(g) -> dict:
    core = classify(g)
    profile = attachment_profile(g, core)
    names = core_names(g, core)
    leaves = {names[v]: c for v, c in sorted(profile.pendants.items())}
    return {
        "descriptor": core.to_dict(),
        "attachment": profile.to_dict(),
        "names": {str(v): names[v] for v in sorted(names)},
        "leaves": leaves,
    }


def cmd_classify(args, out):
    reports = [describe(g) for g in _load(args)]
    json.dump(reports[0] if len(reports) == 1 else reports, out, indent=2)
    out.write("\n")
    return 0


def _parse_attach(text: str) -> dict[str, int]:
    attach: dict[str, int] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, count = item.partition(":")
        if not sep or not count.strip().lstrip("-").isdigit():
            raise UsageError(f"--attach expects vertex:count pairs, got {item!r}")
        attach[name.strip()] = attach.get(name.strip(), 0) + int(count)
    return attach


def cmd_gen(args, out):
    if args.all_bicyclic:
        if args.n is None:
            raise UsageError("--all-bicyclic needs --n")
        for g in all_bicyclic(args.n):
            out.write(to_graph6(g) + "\n")
        return 0
    if args.family is None:
        raise UsageError("gen needs --family or --all-bicyclic")
    attach = _parse_attach(args.attach) if args.attach else None
    p = 3 if args.p is None else args.p
    q = 3 if args.q is None else args.q
    if args.family == "theta":
        spec = FamilySpec.theta(p, q, 1 if args.l is None else args.l, args.n, attach)
    elif args.family == "bowtie":
        spec = FamilySpec.bowtie(p, q, args.n, attach)
    else:
        spec = FamilySpec.dumbbell(p, q, 1 if args.r is None else args.r, args.n, attach)
    g = build(spec)
    out.write((format_edgelist(g) if args.edgelist else to_graph6(g) + "\n"))
    return 0


def cmd_search(args, out):
    report = verify.extremal_search(args.n, args.jobs)
    data = report.to_dict()
    data["failures"] = verify.minimum_failures(report)
    text = json.dumps(data, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_verify(args, out):
    report = verify.run_suite(args.suite, args.n_max, args.jobs)
    json.dump(report, out, indent=2)
    out.write("\n")
    return 0 if report["pass"] else EXIT_VERIFY


def cmd_export(args, out):
    for i, g in enumerate(_load(args)):
        if args.to == "dot":
            labels = None
            if args.names:
                try:
                    labels = core_names(g)
                except GraphError:
                    labels = None
            out.write(to_dot(g, f"G{i}", labels))
        elif args.to == "g6":
            out.write(to_graph6(g) + "\n")
        else:
            out.write(format_edgelist(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avmlab", description="Maximal matchings and avm(G) of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, fmt=True):
        p.add_argument("--input", "-i", required=True, help="graph file, or - for stdin")
        if fmt:
            p.add_argument("--format", choices=["g6", "edgelist"],
                           help="input format (sniffed when omitted)")
        return p

    with_input(sub.add_parser("compute", help="m, m', avm and the size histogram"))
    with_input(sub.add_parser("enumerate", help="list maximal matchings"))
    with_input(sub.add_parser("classify", help="core type, parameters and leaf placement"))

    gen = sub.add_parser("gen", help="build a named family or all bicyclic graphs")
    gen.add_argument("--family", choices=FAMILIES)
    gen.add_argument("--all-bicyclic", action="store_true")
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--attach", help="leaf counts, e.g. v1:2,w2:1")
    gen.add_argument("--edgelist", action="store_true", help="write an edge list instead of graph6")

    search = sub.add_parser("search", help="exhaustive avm minimum over bicyclic graphs")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--jobs", type=int, default=1)
    search.add_argument("--out")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=verify.SUITES, required=True)
    ver.add_argument("--n-max", type=int)
    ver.add_argument("--jobs", type=int, default=1)

    export = sub.add_parser("export", help="convert a graph file")
    export.add_argument("--input", "-i", required=True)
    export.add_argument("--format", dest="to", choices=["dot", "g6", "edgelist"], default="dot",
                        help="output format")
    export.add_argument("--input-format", dest="format", choices=["g6", "edgelist"])
    export.add_argument("--names", action="store_true", help="label core vertices by name")
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "gen": cmd_gen,
    "search": cmd_search,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InfeasibleSpec, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AvmlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
