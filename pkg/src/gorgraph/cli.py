"""Command-line entry point: ``gorgraph {classify,survey,sqc}``.

Every flag can also be set through an environment variable named
``GORGRAPH_<FLAG>`` (upper case, dashes as underscores), e.g.
``GORGRAPH_CHAR=2`` or ``GORGRAPH_MAX_N=12``. Flags win over the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .circulants import FAMILIES, rows_to_csv, rows_to_jsonl, survey
from .gorenstein import Verdict, is_gorenstein
from .graph import CirculantSpec, Graph, SizeCapError, iter_bits, set_size_cap, DEFAULT_SIZE_CAP
from .homology import parse_char
from .io import GraphFormatError, parse_graph6, read_edge_list
from .sqc import find_sqc_partition, sqc_gorenstein

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3
ENV_PREFIX = "GORGRAPH_"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _env(name, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _add_common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--char", default=_env("char", "all"),
                   help="field characteristic: all, 0 or a prime (default: all)")
    p.add_argument("--cap", type=int, default=int(_env("cap", DEFAULT_SIZE_CAP)),
                   help="vertex cap for exhaustive enumeration")
    p.add_argument("--format", choices=("human", "json", "csv"), default=_env("format", fmt_default))


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--edges", default=_env("edges"), help="edge-list file")
    src.add_argument("--g6", default=_env("g6"), help="graph6 string")
    src.add_argument("--circulant", default=_env("circulant"), help="circulant spec n:s1,s2,...")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gorgraph", description="Gorenstein / W2 / CM classification of small graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="full verdict for one graph")
    _add_input(p)
    _add_common(p, "human")

    p = sub.add_parser("survey", help="check the circulant classifications by brute force")
    p.add_argument("--family", choices=FAMILIES, default=_env("family"), required=_env("family") is None)
    p.add_argument("--max-n", type=int, default=int(_env("max_n", 14)))
    p.add_argument("--jobs", type=int, default=int(_env("jobs", 1)))
    _add_common(p, "csv")

    p = sub.add_parser("sqc", help="SQC partition and Gorenstein cross-check")
    _add_input(p)
    _add_common(p, "human")
    return parser


def load_graph(args) -> Graph:
    given = [x for x in (args.edges, args.g6, args.circulant) if x]
    if len(given) != 1:
        raise GraphFormatError("give exactly one of --edges, --g6, --circulant")
    if args.edges:
        try:
            return read_edge_list(args.edges)
        except OSError as exc:
            raise GraphFormatError(str(exc)) from None
    if args.g6:
        return parse_graph6(args.g6)
    return CirculantSpec.parse(args.circulant).graph()


def _b(v) -> str:
    return "n/a" if v is None else str(v).lower()


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def render_verdict(g: Graph, verdict: Verdict, fmt: str) -> str:
    if fmt == "json":
        return verdict.to_json(indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        cols = ["component", "shape", "alpha", "wellCovered", "w2", "cm", "eulerOk",
                "linkConditionOk", "gorenstein", "path"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for c in verdict.components:
            d = c.to_dict()
            d["component"] = " ".join(map(str, c.component))
            d["w2"] = c.w2.verdict
            w.writerow([d[k] if isinstance(d[k], (str, int)) and not isinstance(d[k], bool) else _b(d[k]) for k in cols])
        return buf.getvalue()
    lines = [f"graph: n={g.n} edges={g.num_edges}", f"char: {verdict.char}",
             f"gorenstein={_b(verdict.gorenstein)}"]
    for c in verdict.components:
        lines.append(f"component {_fmt_set(c.component)}: shape={c.shape} alpha={c.alpha} path={c.path}")
        lines.append(
            f"  wellCovered={_b(c.well_covered)} w2={_b(c.w2.verdict)} cm={_b(c.cm)} "
            f"eulerOk={_b(c.euler_ok)} linkConditionOk={_b(c.link_condition_ok)} "
            f"gorenstein={_b(c.gorenstein)}"
        )
        if c.w2.pair is not None:
            a1, a2 = (sorted(iter_bits(m)) for m in c.w2.pair)
            lines.append(f"  w2 witness: disjoint sets {_fmt_set(a1)} and {_fmt_set(a2)} do not extend")
        if c.witness:
            wt = dict(c.witness)
            clause = wt.pop("clause")
            detail = " ".join(f"{k}={_fmt_set(v) if isinstance(v, list) else v}" for k, v in sorted(wt.items()))
            lines.append(f"  failed clause: {clause} {detail}")
    return "\n".join(lines) + "\n"


def cmd_classify(args, out) -> int:
    g = load_graph(args)
    verdict = is_gorenstein(g, args.char)
    out.write(render_verdict(g, verdict, args.format))
    return EXIT_OK


def cmd_survey(args, out) -> int:
    rows = survey(args.max_n, args.family, args.char, args.jobs)
    if args.format == "json":
        out.write(rows_to_jsonl(rows))
    elif args.format == "csv":
        out.write(rows_to_csv(rows))
    else:
        for r in rows:
            mark = "SKIPPED" if r.status == "SKIPPED" else ("ok" if r.match else "MISMATCH")
            out.write(f"C_{r.n}({','.join(map(str, r.connections))}): predicted={r.prediction} "
                      f"gorenstein={_b(r.gorenstein)} w2={_b(r.w2)} {mark}\n")
    bad = [r for r in rows if r.status == "OK" and not r.match]
    skipped = sum(r.status == "SKIPPED" for r in rows)
    print(f"{len(rows)} rows, {len(bad)} mismatches, {skipped} skipped", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_sqc(args, out) -> int:
    g = load_graph(args)
    part = find_sqc_partition(g)
    report = {"sqc": part is not None, "partition": part.to_dict() if part else None}
    if part is not None and g.n and all(g.adj):
        predicted = sqc_gorenstein(g)
        engine = is_gorenstein(g, args.char).gorenstein
        report.update(gorenstein=predicted, engine=engine, agree=predicted == engine)
    else:
        report.update(gorenstein=None, engine=None, agree=None)
    if args.format == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        out.write("sqc,m,t,r,gorenstein,engine,agree\n")
        m, t, r = part.counts if part else ("", "", "")
        out.write(f"{_b(report['sqc'])},{m},{t},{r},{_b(report['gorenstein'])},"
                  f"{_b(report['engine'])},{_b(report['agree'])}\n")
    elif part is None:
        out.write("not SQC\n")
    else:
        m, t, r = part.counts
        out.write(f"SQC partition (m={m}, t={t}, r={r}):\n")
        for s in part.simplices:
            out.write(f"  simplex {_fmt_set(g.original(s))}\n")
        for c in part.five_cycles:
            out.write(f"  basic 5-cycle {'-'.join(str(g.labels[v]) for v in c)}\n")
        for cyc, b in part.four_cycle_basics:
            out.write(f"  basic 4-cycle {'-'.join(str(g.labels[v]) for v in cyc)} basics {_fmt_set(g.original(b))}\n")
        if report["gorenstein"] is None:
            out.write("gorenstein=n/a (isolated vertex or empty graph)\n")
        else:
            out.write(f"gorenstein={_b(report['gorenstein'])} engine={_b(report['engine'])} "
                      f"cross-check {'agree' if report['agree'] else 'DISAGREE'}\n")
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.char = parse_char(args.char)
    except ValueError as exc:
        print(f"gorgraph: {exc}", file=sys.stderr)
        return EXIT_PARSE
    set_size_cap(args.cap)
    handler = {"classify": cmd_classify, "survey": cmd_survey, "sqc": cmd_sqc}[args.command]
    try:
        return handler(args, out)
    except SizeCapError as exc:
        print(f"gorgraph: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, ValueError) as exc:
        print(f"gorgraph: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
