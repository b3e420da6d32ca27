"""Command-line workflows.

Exit codes: 0 when the property holds (or the command just produced output),
1 when it fails, 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import urllib.request
from pathlib import Path
from typing import Any, Sequence

from .build import Graph, catalog, sep, sep_dual, wedge
from .classify import classify, is_reflexive
from .formats import SchemaError, emit_report, parse_polydb_record, parse_polytope, polytope_to_dict
from .geometry import Polytope
from .idp import DecompositionGap, decompose_all, idp_pair_check, minkowski_sum, oracle_decompose
from .lattice import is_idp, lattice_points
from .tumat import (
    facet_normal_matrix,
    is_almost_co_unimodular_pair,
    is_facet_unimodular,
    is_totally_unimodular,
)
from .triangulate import (
    centric_triangulation,
    is_unimodular_triangulation,
    placing_triangulation,
    verify_triangulation,
)

DEFAULT_POLYDB_URL = "https://polydb.org/rest/current/collection/Polytopes.Lattice.SmoothReflexive/id/{id}"

COUNTEREXAMPLES = ("oda2d", "nonidp3d", "polydb4d")


class Outcome:
    """What a command produced: a report, a one-line headline and an exit code."""

    def __init__(self, report: Any, headline: str, code: int = 0):
        self.report = report
        self.headline = headline
        self.code = code


def _polytope_summary(p: Polytope) -> dict:
    out = polytope_to_dict(p)
    out["inequalities"] = [{"normal": list(f.normal), "rhs": f.rhs} for f in p.inequalities]
    return out


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(args) -> Outcome:
    p = parse_polytope(args.file)
    report = {"classification": classify(p), "facet_unimodular": is_facet_unimodular(p),
              "lattice_points": len(lattice_points(p))}
    return Outcome(report, f"{p.name or args.file}: reflexive {_yes(report['classification'].reflexive)}")


def _pair_outcome(p: Polytope, q: Polytope, decompose: str | None = None) -> Outcome:
    rep = idp_pair_check(p, q)
    report: dict[str, Any] = {"idp": rep}
    if decompose == "rounding":
        report["rounding"] = decompose_all(p, q)
    elif decompose == "oracle":
        found, gaps = [], []
        for x in lattice_points(minkowski_sum(p, q)):
            try:
                found.append(oracle_decompose(p, q, x))
            except DecompositionGap as exc:
                gaps.append(exc.point)
        report["oracle"] = {"decompositions": found, "gaps": gaps}
    ok = rep.is_idp_pair
    return Outcome(report, f"IDP pair: {_yes(ok)}", 0 if ok else 1)


def cmd_idp_pair(args) -> Outcome:
    return _pair_outcome(parse_polytope(args.p), parse_polytope(args.q), args.decompose)


def cmd_idp(args) -> Outcome:
    if args.kmax < 1:
        raise ValueError("--kmax must be at least 1")
    checks = is_idp(parse_polytope(args.file), args.kmax)
    ok = all(c.holds for c in checks)
    return Outcome({"checks": checks, "idp_up_to_kmax": ok}, f"IDP up to k={args.kmax}: {_yes(ok)}",
                   0 if ok else 1)


def _read_matrix(path: str) -> list[list[int]]:
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise SchemaError("$.matrix", "expected a nonempty list of integer rows")
    from .formats import _vector

    width = len(data[0])
    return [_vector(r, f"$.matrix[{i}]", width) for i, r in enumerate(data)]


def cmd_tu(args) -> Outcome:
    res = is_totally_unimodular(_read_matrix(args.file))
    return Outcome(res, f"totally unimodular: {_yes(res.holds)}", 0 if res.holds else 1)


def _read_edges(path: str) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith(("[", "{")):
        data = json.loads(text)
        if isinstance(data, dict):
            n, edges = data.get("n_vertices"), data.get("edges")
        else:
            n, edges = None, data
        pairs = [tuple(int(x) for x in e) for e in edges]
    else:
        n = None
        pairs = []
        for line in text.splitlines():
            line = line.split("#")[0].strip()
            if line:
                i, j = line.split()
                pairs.append((int(i), int(j)))
    if any(len(e) != 2 for e in pairs):
        raise SchemaError("$.edges", "each edge needs two endpoints")
    n = n or max(max(e) for e in pairs)
    return Graph(int(n), tuple(pairs))


def cmd_sep(args) -> Outcome:
    g = _read_edges(args.file)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    p = sep_dual(g) if args.dual else sep(g)
    report = {"polytope": _polytope_summary(p), "reflexive": is_reflexive(p),
              "facet_unimodular": is_facet_unimodular(p)}
    return Outcome(report, f"{'dual ' if args.dual else ''}symmetric edge polytope: "
                           f"{len(p.vertices)} vertices, {len(p.inequalities)} facets")


def cmd_wedge(args) -> Outcome:
    w = wedge(parse_polytope(args.file), args.facet)
    return Outcome({"polytope": _polytope_summary(w)},
                   f"wedge: {len(w.vertices)} vertices, {len(w.inequalities)} facets")


def cmd_triangulate(args) -> Outcome:
    p = parse_polytope(args.file)
    if args.centric:
        t = centric_triangulation(p)
    else:
        t = placing_triangulation(lattice_points(p), dim=p.dim)
    check = verify_triangulation(p, t)
    uni = is_unimodular_triangulation(t)
    report = {"points": t.points, "cells": t.cells, "check": check, "unimodular": uni}
    return Outcome(report, f"triangulation: {len(t.cells)} cells, verified {_yes(bool(check))}, "
                           f"unimodular {_yes(uni)}", 0 if check else 1)


def cmd_counterexample(args) -> Outcome:
    if args.name == "oda2d":
        return _pair_outcome(catalog("oda2d_P"), catalog("oda2d_Q"))
    if args.name == "nonidp3d":
        checks = is_idp(catalog("nonidp3d"), 2)
        ok = all(c.holds for c in checks)
        return Outcome({"checks": checks}, f"IDP up to k=2: {_yes(ok)}", 0 if ok else 1)
    p, q = catalog("F.4D.0114"), catalog("F.4D.0038")
    out = _pair_outcome(p, q)
    stacked = facet_normal_matrix(p).matrix + facet_normal_matrix(q).matrix
    out.report["totally_unimodular"] = is_totally_unimodular(stacked)
    out.report["almost_co_unimodular"] = is_almost_co_unimodular_pair(p, q)
    return out


def fetch_polydb(ident: str) -> dict:
    url = os.environ.get("ODAKIT_POLYDB_URL", DEFAULT_POLYDB_URL).format(id=ident)
    with urllib.request.urlopen(url, timeout=30) as resp:
        record = json.loads(resp.read().decode())
    parse_polydb_record(record)  # validate before handing it out
    return record


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the full report as JSON")

    ap = argparse.ArgumentParser(prog="odakit", description="IDP pairs of lattice polytopes")
    ap.add_argument("--fetch-polydb", metavar="ID", help="download a PolyDB record and print it")
    sub = ap.add_subparsers(dest="command")

    s = sub.add_parser("analyze", parents=[common], help="classification report")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("idp-pair", parents=[common], help="compare (P+Q)∩Z^n with the sumset")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("--decompose", choices=("rounding", "oracle"))
    s.set_defaults(func=cmd_idp_pair)

    s = sub.add_parser("idp", parents=[common], help="integer decomposition property up to kmax")
    s.add_argument("file")
    s.add_argument("--kmax", type=int, default=2)
    s.set_defaults(func=cmd_idp)

    s = sub.add_parser("tu", parents=[common], help="total unimodularity of a JSON matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_tu)

    s = sub.add_parser("sep", parents=[common], help="symmetric edge polytope of a graph")
    s.add_argument("file")
    s.add_argument("--dual", action="store_true")
    s.set_defaults(func=cmd_sep)

    s = sub.add_parser("wedge", parents=[common], help="wedge over a facet")
    s.add_argument("file")
    s.add_argument("--facet", type=int, required=True)
    s.set_defaults(func=cmd_wedge)

    s = sub.add_parser("triangulate", parents=[common], help="placing or centric triangulation")
    s.add_argument("file")
    s.add_argument("--centric", action="store_true")
    s.set_defaults(func=cmd_triangulate)

    s = sub.add_parser("counterexample", parents=[common], help="run a named fixture end to end")
    s.add_argument("name", choices=COUNTEREXAMPLES)
    s.set_defaults(func=cmd_counterexample)
    return ap


def execute_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout.buffer
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(list(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.fetch_polydb:
            out.write(emit_report(fetch_polydb(args.fetch_polydb), "json"))
            return 0
        if not args.command:
            ap.print_usage(err)
            return 2
        res = args.func(args)
    except (SchemaError, ValueError, KeyError, OSError, DecompositionGap) as exc:
        print(f"odakit: error: {exc}", file=err)
        return 2
    if args.json:
        out.write(emit_report(res.report, "json"))
    else:
        out.write((res.headline + "\n").encode() + emit_report(res.report, "text"))
    return res.code


def main() -> None:
    sys.exit(execute_command(sys.argv[1:]))
