"""Command-line front door: compute, transform, label, verify.

Exit status: 0 when everything passed (or was skipped), 1 on a FAIL or an
explicit search/construction failure, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graph6
from .distinguishing import QUANTITY_KIND, find_distinguishing
from .errors import CapExceeded, ConstructionFailure, Graph6Error, GraphError, UndefinedQuantity
from .graph import Graph
from .harness.claims import Limits, has_failure, resolve, run_claims
from .harness.report import build_report, render_markdown, to_json
from .labelers import (
    bfs_sphere_labeling,
    pair_edge_labeling,
    path_power_labeling,
    star_subdivision_labeling,
    tuple_edge_labeling,
)
from .powers import POWER_THEN_SUBDIVIDE, SUBDIVIDE_THEN_POWER, fractional_power, power, subdivide
from .symmetry import enumerate_automorphisms

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FRAC_ORDERS = {"ps": POWER_THEN_SUBDIVIDE, "sp": SUBDIVIDE_THEN_POWER}


class UsageError(Exception):
    pass


def _ints(text: str, count: int, what: str) -> list[int]:
    parts = text.split(",")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    return vals


def _read_graphs(path: str) -> list[Graph]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise Graph6Error("non-ASCII input", exc.start) from None
    graphs = list(graph6.read_lines(text.splitlines()))
    if not graphs:
        raise UsageError(f"{path} contains no graphs")
    return graphs


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- subcommands


def cmd_compute(args) -> int:
    records = []
    for g in _read_graphs(args.input):
        if args.what == "aut":
            auts = enumerate_automorphisms(g, order_cap=args.aut_cap)
            records.append({"graph": graph6.write(g), "quantity": "aut", "value": auts.order, "certificate": auts.to_json()})
            continue
        d, labeling = find_distinguishing(g, QUANTITY_KIND[args.what], budget=args.budget)
        records.append({"graph": graph6.write(g), "quantity": args.what, "value": d, "certificate": labeling.to_json()})
    for r in records:
        print(json.dumps({k: r[k] for k in ("graph", "quantity", "value")}, sort_keys=True))
    if args.json:
        Path(args.json).write_text(json.dumps(records, sort_keys=True, indent=1) + "\n")
    return EXIT_OK


def _parse_op(op: str):
    name, _, rest = op.partition(":")
    if name in ("power", "subdivide"):
        (k,) = _ints(rest, 1, name)
        return name, k
    if name == "frac":
        ratio, _, order = rest.partition(":")
        m, _, n = ratio.partition("/")
        if order not in FRAC_ORDERS:
            raise UsageError(f"frac order must be one of {sorted(FRAC_ORDERS)}, got {order!r}")
        return name, (_ints(m, 1, "frac m")[0], _ints(n, 1, "frac n")[0], FRAC_ORDERS[order])
    raise UsageError(f"unknown op {op!r}; use power:k, subdivide:k, frac:m/n:ps or frac:m/n:sp")


def cmd_transform(args) -> int:
    name, param = _parse_op(args.op)
    graphs = _read_graphs(args.input)
    if args.superedges and name != "subdivide":
        raise UsageError("--superedges only applies to subdivide:k")
    if args.superedges and len(graphs) != 1:
        raise UsageError("--superedges needs exactly one input graph")
    out = []
    for g in graphs:
        if name == "power":
            out.append(power(g, param))
        elif name == "subdivide":
            sg = subdivide(g, param)
            out.append(sg.graph)
            if args.superedges:
                Path(args.superedges).write_text(sg.superedges_json() + "\n")
        else:
            out.append(fractional_power(g, *param))
    graph6.write_file(args.out, out)
    return EXIT_OK


def _single(path: str | None, method: str) -> Graph:
    if not path:
        raise UsageError(f"--in is required for method {method}")
    graphs = _read_graphs(path)
    if len(graphs) != 1:
        raise UsageError(f"method {method} labels exactly one graph, {path} has {len(graphs)}")
    return graphs[0]


def cmd_label(args) -> int:
    method, _, rest = args.method.partition(":")
    if method == "bfs":
        (k,) = _ints(rest, 1, "bfs")
        labeling = bfs_sphere_labeling(_single(args.input, method), k)
    elif method == "star":
        m, k, s = _ints(rest, 3, "star")
        labeling = star_subdivision_labeling(m, k, s)
    elif method in ("pair", "tuple"):
        g = _single(args.input, method)
        _, el = find_distinguishing(g, "edge", budget=args.budget)
        labeling = pair_edge_labeling(g, el) if method == "pair" else tuple_edge_labeling(g, _ints(rest, 1, "tuple")[0], el)
    elif method == "pathpower":
        n, k = _ints(rest, 2, "pathpower")
        labeling = path_power_labeling(n, k)
    else:
        raise UsageError(f"unknown method {args.method!r}; use bfs:k, star:m,k,s, pair, tuple:k or pathpower:n,k")
    Path(args.out).write_text(json.dumps(labeling.to_json(), sort_keys=True, indent=1) + "\n")
    print(f"{labeling.kind} labeling with {labeling.labels_used} labels written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        ids = resolve(args.claims)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    limits = Limits(
        max_n=args.max_n,
        max_k=args.max_k,
        family_n=args.family_n,
        frac_max_n=min(args.frac_max_n, args.max_n),
        budget=args.budget,
        aut_cap=args.aut_cap,
        samples=args.samples,
        seed=args.seed,
    )
    records = run_claims(ids, limits, jobs=args.jobs)
    report = build_report(records, limits)
    Path(args.out).write_text(to_json(report))
    if args.md:
        Path(args.md).write_text(render_markdown(report))
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    for r in records:
        counts["SKIP" if r["verdict"].startswith("SKIP") else r["verdict"]] += 1
    print(f"{len(records)} records: {counts['PASS']} PASS, {counts['FAIL']} FAIL, {counts['SKIP']} SKIP")
    return EXIT_FAIL if has_failure(records) else EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distpow", description="Distinguishing labelings of graph powers and subdivisions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=10**8, help="search node budget")
        p.add_argument("--aut-cap", type=int, default=10**6, help="automorphism group order cap")

    p = sub.add_parser("compute", help="exact D, D', D'' or automorphism group order")
    p.add_argument("--in", dest="input", required=True, help="graph6 file")
    p.add_argument("--what", required=True, choices=["D", "Dprime", "Dtotal", "aut"])
    p.add_argument("--json", help="write full records with certificates here")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("transform", help="power, subdivision or fractional power")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--op", required=True, help="power:k | subdivide:k | frac:m/n:ps | frac:m/n:sp")
    p.add_argument("--out", required=True)
    p.add_argument("--superedges", help="write superedge map (subdivide only)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("label", help="run a constructive labeler and certify the result")
    p.add_argument("--in", dest="input")
    p.add_argument("--method", required=True, help="bfs:k | star:m,k,s | pair | tuple:k | pathpower:n,k")
    p.add_argument("--out", required=True)
    common(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="run claim checks and write a report")
    p.add_argument("--claims", default="all", help="'all' or comma-separated claim ids")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--family-n", type=int, default=8, help="largest path/cycle order in family claims")
    p.add_argument("--frac-max-n", type=int, default=5, help="largest base order for fractional-power claims")
    p.add_argument("--samples", type=int, default=20, help="random graphs per order above 7")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--md")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, UndefinedQuantity, ConstructionFailure) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
