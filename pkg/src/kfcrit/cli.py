"""Command-line interface.

Exit codes: 0 all verified, 1 a refutation was found, 2 usage or config
error, 3 only inconclusive results.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, _kernels
from .campaign import ConfigError, load_config, run_campaign, run_claim, search_connectivity_k
from .connectivity import vertex_connectivity
from .criticality import is_fractional_k_factor_critical, is_k_factor_critical
from .families import FamilyError, edge_count, parse_family, realize
from .graph import GraphError
from .graph6 import decode, encode, format_edge_list, parse_edge_list
from .report import CLAIM_IDS, Report
from .spectral import DEFAULT_TOL, SpectralError, rho_power, rho_quotient

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(source: str, fmt: str = "auto"):
    """Graph from a family literal, a graph6 string, or a file (graph6 or edge list)."""
    if fmt in ("auto", "family") and source.lstrip().startswith("s="):
        return realize(parse_family(source))
    if fmt == "family":
        raise UsageError(f"not a family literal: {source!r}")
    path = Path(source)
    text = path.read_text() if path.is_file() else source
    if fmt == "edges" or (fmt == "auto" and path.is_file() and not _looks_graph6(text)):
        return parse_edge_list(text)
    return decode(text.strip())


def _looks_graph6(text: str) -> bool:
    body = text.strip()
    return body.startswith(">>graph6<<") or (len(body.split()) == 1 and all(63 <= ord(c) <= 126 for c in body))


def _emit(obj, as_json: bool, text: str):
    print(json.dumps(obj) if as_json else text)


def _parse_params(items) -> dict:
    params = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        key, val = item.split("=", 1)
        if key == "parts":
            params[key] = [int(x) for x in val.split(",") if x]
        else:
            try:
                params[key] = int(val)
            except ValueError:
                params[key] = val
    return params


def cmd_construct(args):
    g = realize(parse_family(args.family))
    if args.format == "edges":
        sys.stdout.write(format_edge_list(g))
    else:
        print(encode(g))
    return EXIT_OK


def cmd_rho(args):
    if args.graph.lstrip().startswith("s=") and not args.power:
        fam = parse_family(args.graph)
        value, method = rho_quotient(fam), "quotient"
    else:
        res = rho_power(load_graph(args.graph, args.input_format), args.tol)
        value, method = res.rho, "power"
    _emit({"rho": value, "method": method}, args.json, repr(value))
    return EXIT_OK


def cmd_edges(args):
    fam = parse_family(args.family)
    _emit({"edges": edge_count(fam)}, args.json, str(edge_count(fam)))
    return EXIT_OK


def _check(args, fn):
    g = load_graph(args.graph, args.input_format)
    v = fn(g, args.k)
    out = {"holds": v.holds, "witness": v.witness_list(), "violation": v.violation_kind}
    text = "holds" if v.holds else f"fails: {v.violation_kind}, witness {v.witness_list()}"
    _emit(out, args.json, text)
    return EXIT_OK


def cmd_check_kfc(args):
    return _check(args, is_k_factor_critical)


def cmd_check_fkfc(args):
    return _check(args, is_fractional_k_factor_critical)


def cmd_connectivity(args):
    kappa = vertex_connectivity(load_graph(args.graph, args.input_format))
    _emit({"connectivity": kappa}, args.json, str(kappa))
    return EXIT_OK


def _print_results(results, as_json):
    if as_json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
        return
    for r in results:
        line = f"{r.claim} {json.dumps(r.params, sort_keys=True)}: {r.status}"
        if r.margin is not None:
            line += f" (lhs={r.lhs}, rhs={r.rhs}, margin={r.margin})"
        if r.note:
            line += f" -- {r.note}"
        print(line)
        if r.witness and r.status != "verified":
            print(f"  witness: {json.dumps(r.witness)}")


def cmd_verify(args):
    results = run_claim(args.claim, _parse_params(args.params), args.tol)
    _print_results(results, args.json)
    if all(r.status == "skipped" for r in results):
        return EXIT_USAGE
    return Report(__version__, _kernels.BACKEND, {}, args.tol, results).exit_code()


def cmd_campaign(args):
    cfg = load_config(args.config)
    if args.out:
        cfg.out = args.out
    if args.csv:
        cfg.csv = args.csv
    if args.workers:
        cfg.workers = args.workers
    report = run_campaign(cfg)
    summary = ", ".join(f"{k}={v}" for k, v in report.counts().items())
    print(f"{len(report.results)} results ({summary}) in {report.wall_time:.2f}s [{report.backend}]")
    for r in report.results:
        if r.status in ("refuted", "inconclusive"):
            _print_results([r], False)
    if not cfg.out:
        print(report.to_json())
    return report.exit_code()


def cmd_search(args):
    for row in search_connectivity_k(args.n, args.k, args.delta, args.max_parts):
        print(json.dumps(row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kfcrit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({_kernels.BACKEND} backend)")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="family literal (s=2;parts=3,3,1), graph6 string, or file")
        sp.add_argument("--input-format", choices=["auto", "family", "graph6", "edges"], default="auto")
        sp.add_argument("--json", action="store_true")
        return sp

    sp = sub.add_parser("construct", help="realize a family and print it")
    sp.add_argument("family")
    sp.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    sp.set_defaults(func=cmd_construct)

    sp = graph_cmd("rho", "spectral radius")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--power", action="store_true", help="use power iteration even for a family literal")
    sp.set_defaults(func=cmd_rho)

    sp = sub.add_parser("edges", help="edge count of a family")
    sp.add_argument("family")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_edges)

    for name, fn, what in (
        ("check-kfc", cmd_check_kfc, "k-factor-criticality"),
        ("check-fkfc", cmd_check_fkfc, "fractional k-factor-criticality"),
    ):
        sp = graph_cmd(name, f"decide {what}")
        sp.add_argument("-k", type=int, required=True)
        sp.set_defaults(func=fn)

    graph_cmd("connectivity", "vertex connectivity").set_defaults(func=cmd_connectivity)

    sp = sub.add_parser("verify", help="check one claim instance")
    sp.add_argument("claim", choices=CLAIM_IDS)
    sp.add_argument("params", nargs="*", help="key=value, e.g. n=31 k=1 delta=2 or s=2 parts=5,3,1 p=1")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("campaign", help="run a JSON-configured verification campaign")
    sp.add_argument("config")
    sp.add_argument("--out", help="report path (overrides config)")
    sp.add_argument("--csv", help="also write a CSV export")
    sp.add_argument("--workers", type=int)
    sp.set_defaults(func=cmd_campaign)

    sp = sub.add_parser("search", help="explore connectivity-exactly-k clique joins (reports only)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--max-parts", type=int, default=3)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ConfigError, FamilyError, GraphError, ValueError, OSError) as e:
        print(f"kfcrit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SpectralError as e:
        print(f"kfcrit: {e}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
