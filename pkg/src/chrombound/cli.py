"""Command line front end: ``poly``, ``bounds``, ``verify`` and ``sweep``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import MODES, AcyclicGraphError, bound_report
from .chromatic import chromatic_polynomial
from .corpus import CorpusSpec, expand, parse_random
from .graph import Graph, GraphFormatError, parse_edge_list, parse_generator
from .suites import SUITES, GraphData, SweepSummary, run_suites

log = logging.getLogger("chrombound")


class UsageError(Exception):
    pass


def load_graph(args) -> Graph:
    if bool(args.input) == bool(args.gen):
        raise UsageError("give exactly one of --input FILE or --gen FAMILY:PARAMS")
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_edge_list(text, name=Path(args.input).stem)
    return parse_generator(args.gen, seed=args.seed)


def load_corpus(args) -> CorpusSpec:
    if args.random:
        spec = CorpusSpec(named=(), random=parse_random(args.random))
    elif args.corpus == "default":
        spec = CorpusSpec.default()
    elif args.corpus == "empty":
        spec = CorpusSpec.empty()
    elif args.corpus == "named":
        spec = CorpusSpec(random=None)
    else:
        raise UsageError(f"unknown corpus {args.corpus!r}")
    if args.seed is not None and spec.random is not None and not args.random:
        spec.random = type(spec.random)(**{**spec.random.__dict__, "seed": args.seed})
    return spec


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_poly(args) -> int:
    g = load_graph(args)
    p = chromatic_polynomial(g, cache=True)
    emit(f"{p.render()}\n{p.to_json()}\n", args.out)
    return 0


def cmd_bounds(args) -> int:
    g = load_graph(args)
    edge_id = None
    if args.edge:
        try:
            a, b = (int(x) for x in args.edge.split(","))
        except ValueError:
            raise UsageError(f"--edge expects U,V, got {args.edge!r}") from None
        edge_id = g.edge_between(a, b)
    report = bound_report(g, args.mode, edge_id=edge_id)
    emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return 0


def _summary_text(summary: SweepSummary) -> str:
    lines = [f"graphs processed: {len(summary.graphs)}"]
    lines += [f"SKIP {s}" for s in summary.skipped]
    for name in sorted(summary.suites):
        lines += summary.suites[name].lines()
    lines.append("OK" if summary.ok else "FAILURES PRESENT")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    graphs, skipped = expand(load_corpus(args))
    names = list(SUITES) if args.suite == "all" else [args.suite]
    summary = run_suites(graphs, names, skipped)
    if args.format == "json" or args.out:
        emit(json.dumps(summary.to_dict(), indent=2) + "\n", args.out)
    sys.stderr.write(_summary_text(summary)) if args.out or args.format == "json" else sys.stdout.write(_summary_text(summary))
    return 0 if summary.ok else 1


def cmd_sweep(args) -> int:
    graphs, skipped = expand(load_corpus(args))
    out = Path(args.out)
    (out / "reports").mkdir(parents=True, exist_ok=True)
    summary = run_suites(graphs, list(SUITES), skipped)
    for g in sorted(graphs, key=lambda g: g.name):
        d = GraphData(g)
        path = out / "reports" / f"{g.name}.json"
        if d.cyclic:
            path.write_text(bound_report(g, args.mode, exact=d.poly, census=d.census).to_json())
        else:
            path.write_text(json.dumps({
                "graph": g.name, "edgeList": g.to_edge_list(), "v": g.v, "e": g.e,
                "exact": [str(a) for a in d.poly.magnitudes], "bounds": None,
                "reason": "acyclic: girth undefined",
            }, indent=2) + "\n")
    (out / "summary.json").write_text(json.dumps(summary.to_dict(), indent=2) + "\n")
    sys.stdout.write(_summary_text(summary))
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chrombound", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p):
        p.add_argument("--input", metavar="FILE", help="edge-list file ('-' for stdin)")
        p.add_argument("--gen", metavar="FAMILY:PARAMS", help="e.g. complete:n=4, randomGnm:n=6,m=8")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", metavar="PATH")

    def corpus_source(p):
        p.add_argument("--corpus", default="default", help="default | named | empty")
        p.add_argument("--random", metavar="SPEC", help="n=4-8,m=5-12,count=10,seed=7 (replaces the corpus)")
        p.add_argument("--seed", type=int, help="seed for the default random part")

    p = sub.add_parser("poly", help="exact chromatic polynomial")
    graph_source(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bounds", help="per-r table of exact a_r and bounds")
    graph_source(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--mode", choices=MODES, default="per-r")
    p.add_argument("--edge", metavar="U,V", help="use this edge instead of selecting one")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run one verification suite (or all) over a corpus")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    corpus_source(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="all suites plus one bound report per graph")
    corpus_source(p)
    p.add_argument("--out", metavar="DIR", required=True)
    p.add_argument("--mode", choices=MODES, default="per-r")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, AcyclicGraphError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"chrombound {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
