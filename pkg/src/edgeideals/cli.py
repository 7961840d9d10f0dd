"""Command-line front door.

Thin adapters only: every computation lives behind the library modules.
Exit codes: 0 success / no failures, 1 verification failures found,
2 input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import monomials as mon
from .betti import (
    DEFAULT_CAPS,
    CapacityError,
    EngineDisagreement,
    betti_table,
    regularity,
)
from .evenconn import EvenConnectionError, colon_graph, colon_ideal_by_algebra
from .generators import FamilySpec, GenerationError
from .graphs import (
    INFINITE,
    EdgeListParseError,
    GraphError,
    find_vwc_certificate,
    from_edge_list,
    induced_matching_number,
    is_unmixed,
    is_very_well_covered,
    odd_girth,
    to_edge_list,
)
from .verify import CHECK_NAMES, SweepParams, run_sweep

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


class CliError(Exception):
    """Bad input or configuration; maps to exit code 2."""


def _load_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return from_edge_list(text)
    except EdgeListParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _parse_edges(text):
    """Parse '--edges 1-2,2-3' into a list of vertex pairs."""
    out = []
    for part in text.split(","):
        part = part.strip()
        bits = part.split("-")
        if len(bits) != 2:
            raise CliError(f"bad edge {part!r}; expected 'u-v'")
        try:
            out.append((int(bits[0]), int(bits[1])))
        except ValueError as exc:
            raise CliError(f"bad edge {part!r}: {exc}") from exc
    if not out:
        raise CliError("--edges needs at least one edge")
    return out


def _og_json(G):
    og = odd_girth(G)
    return "inf" if og == INFINITE else og


def _emit(obj, fmt, render_text):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(render_text(obj))


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------


def cmd_analyze(args):
    G = _load_graph(args.graph)
    if not G.edges:
        raise CliError("the graph has no edges")
    cert = find_vwc_certificate(G)
    obj = {
        "n": G.n,
        "edges": [list(e) for e in G.sorted_edges],
        "edge_count": len(G.edges),
        "odd_girth": _og_json(G),
        "induced_matching_number": induced_matching_number(G),
        "unmixed": is_unmixed(G),
        "very_well_covered": is_very_well_covered(G),
        "certificate": [list(e) for e in cert] if cert else None,
    }

    def text(o):
        lines = [
            f"n = {o['n']}, |E| = {o['edge_count']}",
            f"odd-girth = {o['odd_girth']}",
            f"induced matching number = {o['induced_matching_number']}",
            f"unmixed = {o['unmixed']}",
            f"very well-covered = {o['very_well_covered']}",
        ]
        if o["certificate"]:
            pairs = " ".join(f"{u}-{v}" for u, v in o["certificate"])
            lines.append(f"matching certificate: {pairs}")
        return "\n".join(lines)

    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_regularity(args):
    G = _load_graph(args.graph)
    if not G.edges:
        raise CliError("the graph has no edges")
    if args.power < 1:
        raise CliError("--power must be >= 1")
    I = mon.power(mon.edge_ideal(G), args.power)
    try:
        table = betti_table(I, engine=args.engine, caps=DEFAULT_CAPS)
        reg = regularity(I, engine=args.engine, caps=DEFAULT_CAPS)
    except CapacityError as exc:
        raise CliError(f"capacity exceeded: {exc}") from exc
    obj = {
        "power": args.power,
        "engine": args.engine,
        "generators": len(I.gens),
        "regularity": reg,
        "betti": table.to_json_obj(),
    }

    def text(o):
        return (
            f"reg(I(G)^{o['power']}) = {o['regularity']}  "
            f"[engine={o['engine']}, {o['generators']} generators]\n"
            + table.text_triangle()
        )

    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_colon(args):
    G = _load_graph(args.graph)
    edges = _parse_edges(args.edges)
    try:
        cg = colon_graph(G, edges)
    except EvenConnectionError as exc:
        raise CliError(str(exc)) from exc
    oracle = colon_ideal_by_algebra(G, edges)
    agree = mon.equals(cg.as_ideal(), oracle)
    if args.format == "dot":
        print(cg.to_dot(G))
        return EXIT_OK if agree else EXIT_FAIL
    obj = {
        "product": [list(e) for e in sorted(tuple(sorted(e)) for e in edges)],
        "new_edges": [list(e) for e in cg.new_edges(G)],
        "squares": sorted(cg.squares),
        "squarefree": cg.is_squarefree,
        "colon_odd_girth": "inf"
        if odd_girth(cg.edge_graph()) == INFINITE
        else odd_girth(cg.edge_graph()),
        "oracle_agrees": agree,
    }

    def text(o):
        lines = [
            "new edges: "
            + (" ".join(f"{u}-{v}" for u, v in o["new_edges"]) or "(none)"),
            "squares: "
            + (" ".join(str(v) for v in o["squares"]) or "(none)"),
            f"squarefree = {o['squarefree']}",
            f"colon graph odd-girth = {o['colon_odd_girth']}",
            f"oracle agrees = {o['oracle_agrees']}",
        ]
        return "\n".join(lines)

    _emit(obj, args.format, text)
    return EXIT_OK if agree else EXIT_FAIL


def _params_from_args(args, config=None):
    config = config or {}
    return SweepParams(
        s_values=tuple(config.get("s_values", args.s_values or (1, 2))),
        seed=args.seed if args.seed is not None else config.get("seed", 0),
        multiset_sample=config.get("multiset_sample", 50),
        jobs=args.jobs or config.get("jobs", 1),
        timings=args.timings or config.get("timings", False),
    )


def cmd_verify(args):
    G = _load_graph(args.graph)
    checks = args.checks or list(CHECK_NAMES)
    for c in checks:
        if c not in CHECK_NAMES:
            raise CliError(
                f"unknown check {c!r}; available: {', '.join(CHECK_NAMES)}"
            )
    # Single-graph verification: reuse the sweep machinery on a
    # one-element stream wrapping the parsed graph.
    params = _params_from_args(args)
    report = run_sweep(_InlineSpec(G), checks, params)
    _emit(
        report.to_json_obj(),
        args.format,
        lambda o: _render_report_text(report),
    )
    return EXIT_FAIL if report.fail_count else EXIT_OK


class _InlineSpec(FamilySpec):
    """A FamilySpec wrapper around one preparsed graph."""

    def __init__(self, G):
        object.__setattr__(self, "kind", "named")
        object.__setattr__(self, "n", None)
        object.__setattr__(self, "m", None)
        object.__setattr__(self, "density", 0.3)
        object.__setattr__(self, "seed", 0)
        object.__setattr__(self, "odd_girth_min", None)
        object.__setattr__(self, "cap", None)
        object.__setattr__(self, "names", ("inline",))
        object.__setattr__(self, "_graph", G)

    def instances(self):
        return [self._graph]

    def to_json_obj(self):
        return {
            "kind": "inline",
            "n": self._graph.n,
            "edges": [list(e) for e in self._graph.sorted_edges],
        }


def _render_report_text(report):
    lines = []
    for check, tally in report.summary.items():
        lines.append(
            f"{check}: pass={tally['pass']} fail={tally['fail']} "
            f"skipped={tally['skipped']} observation={tally['observation']}"
        )
    for r in report.failures():
        lines.append(f"FAIL {r.check} {r.instance} {r.values}")
    lines.append(f"total failures: {report.fail_count}")
    return "\n".join(lines)


def cmd_sweep(args):
    if not args.config:
        raise CliError("sweep needs --config FILE")
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {args.config}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.config}: invalid JSON: {exc}") from exc
    try:
        spec = FamilySpec.from_json_obj(config["family"])
        checks = config.get("checks", list(CHECK_NAMES))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad sweep config: {exc}") from exc
    for c in checks:
        if c not in CHECK_NAMES:
            raise CliError(f"unknown check {c!r}")
    params = _params_from_args(args, config)
    report = run_sweep(spec, checks, params)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        json_path = os.path.join(args.out, "report.json")
        csv_path = os.path.join(args.out, "report.csv")
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
        print(f"wrote {json_path} and {csv_path}")
        print(_render_report_text(report))
    elif args.format == "csv":
        print(report.to_csv(), end="")
    elif args.format == "json":
        print(report.to_json(), end="")
    else:
        print(_render_report_text(report))
    return EXIT_FAIL if report.fail_count else EXIT_OK


def cmd_generate(args):
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                spec = FamilySpec.from_json_obj(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CliError(f"bad family config: {exc}") from exc
    else:
        if not args.kind:
            raise CliError("generate needs --kind or --config")
        try:
            spec = FamilySpec(
                kind=args.kind,
                n=args.n,
                m=args.m,
                density=args.density,
                seed=args.seed if args.seed is not None else 0,
                odd_girth_min=args.odd_girth_min,
                cap=args.cap,
                names=tuple(args.names or ()),
            )
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    try:
        graphs = spec.instances()
    except (GraphError, GenerationError) as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"n": G.n, "edges": [list(e) for e in G.sorted_edges]}
                    for G in graphs
                ],
                sort_keys=True,
                indent=2,
            )
        )
    else:
        docs = [to_edge_list(G) for G in graphs]
        print("\n".join(docs), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description=(
            "Exact computations on edge ideals of graphs: regularity of "
            "powers, colon-ideal graphs by even-connection, very "
            "well-covered graph families, and theorem verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=False):
        p.add_argument("--format", choices=("json", "text", "csv", "dot"),
                       default="text")
        if graph:
            p.add_argument("--graph", required=True,
                           help="edge-list file ('n <count>' header, one edge per line)")

    p = sub.add_parser("analyze", help="graph invariants and vwc certificate")
    common(p, graph=True)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("regularity", help="reg(I(G)^s) and the Betti table")
    common(p, graph=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--engine", choices=("lcm", "hochster", "both", "auto"),
                   default="auto")
    p.set_defaults(fn=cmd_regularity)

    p = sub.add_parser("colon", help="colon graph of (I^{s+1} : e_1...e_s)")
    common(p, graph=True)
    p.add_argument("--edges", required=True, help="edge product, e.g. '1-2,2-3'")
    p.set_defaults(fn=cmd_colon)

    p = sub.add_parser("verify", help="run theorem checks on one graph")
    common(p, graph=True)
    p.add_argument("--checks", nargs="*", metavar="CHECK")
    p.add_argument("--s-values", dest="s_values", type=int, nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="run a verification sweep from a config")
    common(p)
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="directory for report.json / report.csv")
    p.add_argument("--s-values", dest="s_values", type=int, nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("generate", help="emit graph families as edge lists")
    common(p)
    p.add_argument("--config")
    p.add_argument("--kind", choices=("exhaustive-all", "exhaustive-vwc",
                                      "random-vwc", "named"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int)
    p.add_argument("--odd-girth-min", dest="odd_girth_min", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--names", nargs="*", help="e.g. C5 P4 'corona(C7)'")
    p.set_defaults(fn=cmd_generate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (GraphError, mon.IdealError, EngineDisagreement) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
