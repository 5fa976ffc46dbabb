"""Command-line surface: generators, solvers, constructions, claim suite.

Graph inputs are accepted interchangeably as built-in names ("fig1_left",
"cycle:6", "circulant:8,3,4"), graph6 strings, or file paths holding graph6
or edge-list text; the format is sniffed and can be forced with --format.
Exit codes: 0 success, 1 failed claims or failed operations, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import claims as claims_mod
from . import constructions as cons
from . import graphs
from .forcing import closure, rule_from_name, zero_forcing_number
from .skew_rank import max_nullity_witness_search
from .spectra import char_poly, kind_from_letter


def load_graph(spec: str, fmt: str = "auto") -> graphs.Graph:
    if fmt == "auto":
        if os.path.exists(spec):
            fmt = "file"
        elif spec.split(":", 1)[0] in graphs.named_graphs():
            fmt = "name"
        else:
            fmt = "graph6"
    if fmt == "name":
        name, _, raw = spec.partition(":")
        params = [int(p) for p in raw.split(",") if p] if raw else []
        return graphs.build_named(name, *params)
    if fmt == "graph6":
        return graphs.parse_graph6(spec)
    if fmt == "edgelist":
        with open(spec, encoding="utf-8") as handle:
            return graphs.parse_edgelist(handle.read())
    if fmt == "file":
        with open(spec, encoding="utf-8") as handle:
            content = handle.read()
        lines = [ln for ln in content.splitlines() if ln.strip() and not ln.startswith("#")]
        if lines and all(len(ln.split()) == 2 and all(tok.isdigit() for tok in ln.split())
                         for ln in lines):
            return graphs.parse_edgelist(content)
        return graphs.parse_graph6(lines[0] if lines else "")
    raise ValueError(f"unknown input format {fmt!r}")


def _parse_vertex_list(raw: str) -> list[int]:
    return [int(tok) for tok in raw.replace(",", " ").split()]


def _add_input_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", default="auto",
                        choices=["auto", "name", "graph6", "edgelist", "file"],
                        help="how to interpret graph inputs (default: sniff)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zfforge",
        description="exact zero-forcing solvers, integer spectra, and cospectral constructions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named graph")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("zf", help="exact zero forcing number with witness")
    p.add_argument("input")
    p.add_argument("--rule", required=True, choices=["standard", "skew", "psd"])
    p.add_argument("--certificate", help="write the witness certificate JSON here")
    _add_input_format(p)

    p = sub.add_parser("closure", help="closure of an initial set with its trace")
    p.add_argument("input")
    p.add_argument("--rule", required=True, choices=["standard", "skew", "psd"])
    p.add_argument("--set", required=True, help="comma-separated initial vertices")
    _add_input_format(p)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("input")
    p.add_argument("--matrix", default="A", choices=["A", "L", "Q"])
    _add_input_format(p)

    p = sub.add_parser("cospectral", help="exact cospectrality of two graphs")
    p.add_argument("input1")
    p.add_argument("input2")
    p.add_argument("--matrix", default="A", choices=["A", "L", "Q"])
    _add_input_format(p)

    p = sub.add_parser("iso", help="isomorphism with mapping witness")
    p.add_argument("input1")
    p.add_argument("input2")
    _add_input_format(p)

    p = sub.add_parser("gm-switch", help="partition switching with validation report")
    p.add_argument("input")
    p.add_argument("--parts", action="append", required=True,
                   help="comma-separated vertices of one part; repeat for more parts")
    _add_input_format(p)

    p = sub.add_parser("construct", help="build a shipped construction pair")
    p.add_argument("family", choices=["theorem51", "regular6k", "tensor-family",
                                      "join-family", "corollary52"])
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--base")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--seed", type=int, default=0)
    _add_input_format(p)

    p = sub.add_parser("skew-nullity", help="maximum-nullity witness search")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=4000)
    p.add_argument("--seed", type=int, default=0)
    _add_input_format(p)

    p = sub.add_parser("verify-paper", help="run the built-in claim catalog")
    p.add_argument("--only", help="restrict to claim ids with this prefix")
    p.add_argument("--json", help="write the full report JSON here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_gen(args) -> int:
    g = graphs.build_named(args.name, *args.params)
    print(graphs.emit_graph6(g) if args.format == "graph6" else graphs.emit_edgelist(g))
    return 0


def _cmd_zf(args) -> int:
    g = load_graph(args.input, args.format)
    result = zero_forcing_number(g, rule_from_name(args.rule))
    print(result.value)
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as handle:
            json.dump(result.witness.to_json(), handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 0


def _cmd_closure(args) -> int:
    g = load_graph(args.input, args.format)
    initial = _parse_vertex_list(args.set)
    final, cert = closure(g, rule_from_name(args.rule), initial)
    print(json.dumps({"final": sorted(graphs.bits(final)),
                      "all_blue": final == g.full_mask,
                      "certificate": cert.to_json()}, indent=2, sort_keys=True))
    return 0


def _cmd_charpoly(args) -> int:
    g = load_graph(args.input, args.format)
    print(json.dumps(char_poly(g, kind_from_letter(args.matrix)).to_json()))
    return 0


def _cmd_cospectral(args) -> int:
    kind = kind_from_letter(args.matrix)
    g = load_graph(args.input1, args.format)
    h = load_graph(args.input2, args.format)
    pg, ph = char_poly(g, kind), char_poly(h, kind)
    print(json.dumps({"cospectral": pg == ph,
                      "char_poly_1": pg.to_json(),
                      "char_poly_2": ph.to_json()}, indent=2, sort_keys=True))
    return 0


def _cmd_iso(args) -> int:
    g = load_graph(args.input1, args.format)
    h = load_graph(args.input2, args.format)
    iso, mapping = graphs.is_isomorphic(g, h)
    print(json.dumps({"isomorphic": iso,
                      "mapping": list(mapping) if mapping else None},
                     indent=2, sort_keys=True))
    return 0


def _cmd_gm_switch(args) -> int:
    g = load_graph(args.input, args.format)
    parts = [graphs.mask_from(_parse_vertex_list(raw)) for raw in args.parts]
    partition = cons.switching_partition(g, parts)
    if not partition.validation.ok:
        print(json.dumps({"error": "invalid switching partition",
                          "validation": partition.validation.to_json()},
                         indent=2, sort_keys=True))
        return 1
    switched = cons.gm_switch(g, partition)
    print(json.dumps({"graph6": graphs.emit_graph6(switched),
                      "validation": partition.validation.to_json()},
                     indent=2, sort_keys=True))
    return 0


def _cmd_construct(args) -> int:
    fam = args.family
    if fam == "theorem51":
        g1 = load_graph(args.g1, args.format) if args.g1 else None
        g2 = load_graph(args.g2, args.format) if args.g2 else None
        payload = cons.theorem51_build(g1, g2, args.m).to_json()
    elif fam == "regular6k":
        if args.k is None:
            raise ValueError("regular6k needs --k")
        payload = cons.regular_construction(args.k).to_json()
    elif fam == "tensor-family":
        if args.base is None or args.r is None:
            raise ValueError("tensor-family needs --base and --r")
        base = load_graph(args.base, args.format)
        payload = cons.tensor_family(base, args.r, seed=args.seed).to_json()
    elif fam == "join-family":
        if args.g1 is None or args.g2 is None or args.r is None:
            raise ValueError("join-family needs --g1, --g2 and --r")
        payload = cons.join_family(load_graph(args.g1, args.format),
                                   load_graph(args.g2, args.format), args.r).to_json()
    else:
        if args.c is None:
            raise ValueError("corollary52 needs --c")
        payload = cons.corollary52_family(args.c).to_json()
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_skew_nullity(args) -> int:
    g = load_graph(args.input, args.format)
    witness = max_nullity_witness_search(g, budget=args.budget, seed=args.seed)
    print(json.dumps(witness.to_json(), indent=2, sort_keys=True))
    return 0


def _cmd_verify_paper(args) -> int:
    reports = claims_mod.run_claims(prefix=args.only, jobs=args.jobs, seed=args.seed)
    if not reports:
        print(f"no claims match prefix {args.only!r}", file=sys.stderr)
        return 2
    for report in reports:
        print(f"{report.status:<15} {report.claim_id:<35} "
              f"expected={report.expected!r} computed={report.computed!r}")
    summary = claims_mod.summarize(reports)
    print(f"{len(reports)} claims: {summary['pass']} pass, "
          f"{summary['fail']} fail, {summary['skipped']} skipped")
    if args.json:
        payload = {"claims": [r.to_json() for r in reports],
                   "summary": summary,
                   "version": claims_mod.VERSION}
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 0 if summary["fail"] == 0 and summary["skipped"] == 0 else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "zf": _cmd_zf,
    "closure": _cmd_closure,
    "charpoly": _cmd_charpoly,
    "cospectral": _cmd_cospectral,
    "iso": _cmd_iso,
    "gm-switch": _cmd_gm_switch,
    "construct": _cmd_construct,
    "skew-nullity": _cmd_skew_nullity,
    "verify-paper": _cmd_verify_paper,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, RuntimeError) as exc:
        if getattr(args, "json", None):
            try:
                with open(args.json, "w", encoding="utf-8") as handle:
                    json.dump({"error": str(exc)}, handle, indent=2, sort_keys=True)
                    handle.write("\n")
            except OSError:
                pass
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
