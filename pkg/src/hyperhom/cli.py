"""Command-line interface.

Commands: homology, topology, distance, persist, verify.  Exit codes:
0 success, 1 failed check, 2 bad input or usage.  Output defaults to a
readable text report; `--output json` emits the versioned report schema and
`--output csv` is available for barcodes.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import topology
from .errors import HyperhomError, InputError
from .fieldlin import CoefficientSpec, QQ, ZZ
from .homology import Workspace, relative_embedded_homology
from .hypergraph import Hypergraph, HypergraphPair, empty_like
from .io import load_document
from .persistence import (
    barcode,
    iterated_filtration,
    relative_persistence,
    sublevel_filtration,
)
from .reports import barcode_csv, build_report, group_str, render_json, render_text
from .verify import VerifyOptions, run_check

TOPOLOGY_OPS = {
    "complement": "complement",
    "closed-complement": "closed_complement",
    "bd": "boundary",
    "int": "interior",
    "cl": "closure",
    "n": "n",
    "cor": "cor",
}


def _thread_default() -> int:
    env = os.environ.get("HYPERHOM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"HYPERHOM_THREADS must be an integer, got {env!r}") from None
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperhom",
        description="Exact embedded homology, combinatorial topology, and persistence for hypergraphs.",
    )
    parser.add_argument("--output", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--threads", type=int, default=None, help="worker threads for verify batteries")
    # the common flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p_hom = sub.add_parser("homology", parents=[common], help="embedded or relative embedded homology")
    p_hom.add_argument("file")
    p_hom.add_argument("--sub", help="named sub-hypergraph for relative homology")
    p_hom.add_argument("--coeff", default="z", help="z, q, or zp:<p>")
    p_hom.add_argument("--flavor", choices=("inf", "sup", "delta", "lower"), default="inf")

    p_top = sub.add_parser("topology", parents=[common], help="combinatorial topology operators")
    p_top.add_argument("file")
    p_top.add_argument("--op", required=True, choices=sorted(TOPOLOGY_OPS))
    p_top.add_argument("--sub", required=True)
    p_top.add_argument("--iterate", type=int, default=1, help="iteration count for n / cor")

    p_dist = sub.add_parser("distance", parents=[common], help="k-path pseudo-distance between two hyperedges")
    p_dist.add_argument("file")
    p_dist.add_argument("edge", nargs=2, help="hyperedge as comma-separated labels, e.g. v0,v1")

    p_per = sub.add_parser("persist", parents=[common], help="barcodes and rank invariants over filtrations")
    p_per.add_argument("file")
    p_per.add_argument("--filtration", choices=("sublevel", "core-neighborhood"), default="sublevel")
    p_per.add_argument("--degree", type=int, default=None, help="default: all degrees")
    p_per.add_argument("--grid", help="comma-separated thresholds (sublevel; default: the value set)")
    p_per.add_argument("--sub", help="sub-hypergraph for core-neighborhood filtrations")
    p_per.add_argument("--kmax", type=int, default=2)
    p_per.add_argument("--coeff", default="q")
    p_per.add_argument("--flavor", choices=("inf", "delta", "lower"), default="inf")
    p_per.add_argument("--relative", action="store_true", help="persist the relative groups H(total, step)")
    p_per.add_argument("--rank-invariant", action="store_true", help="two-parameter rank table on the grid")

    p_ver = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p_ver.add_argument("file")
    p_ver.add_argument("--check", required=True)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--fuzz", type=int, default=None, help="override the battery size")
    p_ver.add_argument("--kmax", type=int, default=2)
    return parser


def _load(path):
    doc = load_document(path)
    h = doc.hypergraph()
    subs = {name: doc.sub_hypergraph(name) for name in doc.subs}
    return doc, h, subs


def _coeff(text) -> CoefficientSpec:
    return CoefficientSpec.parse(text)


def _parse_edge(h: Hypergraph, text: str):
    labels = [x for x in text.replace(",", " ").split() if x]
    if not labels:
        raise InputError("empty hyperedge argument")
    ids = tuple(sorted(h.space.id_of(v) for v in labels))
    return ids


def cmd_homology(args) -> tuple[dict, int]:
    doc, h, subs = _load(args.file)
    if args.sub:
        if args.sub not in subs:
            raise InputError(f"no sub-hypergraph named {args.sub!r}")
        sub = subs[args.sub]
    else:
        sub = empty_like(h)
    pair = HypergraphPair(h, sub)
    coeff = _coeff(args.coeff)
    groups = relative_embedded_homology(pair, coeff, args.flavor)
    results = {
        "degrees": {f"H_{n}": str(g) for n, g in enumerate(groups)},
        "flavor": args.flavor,
        "relative_to": args.sub or None,
    }
    return build_report(_echo(args), coeff, results), 0


def cmd_topology(args) -> tuple[dict, int]:
    doc, h, subs = _load(args.file)
    if args.sub not in subs:
        raise InputError(f"no sub-hypergraph named {args.sub!r}")
    a = subs[args.sub]
    warnings = []
    op = args.op
    if op == "n":
        out = topology.neighborhood(h, a, args.iterate)
    elif op == "cor":
        out = topology.core(h, a, args.iterate)
    else:
        out = topology.topology_operator(h, a, TOPOLOGY_OPS[op])
    is_open_flag, is_closed_flag = topology.openness(h, a)
    results = {
        "op": op,
        "hyperedges": [list(h.edge_labels(e)) for e in out.sorted_edges],
        "sub_is_open": is_open_flag,
        "sub_is_closed": is_closed_flag,
    }
    return build_report(_echo(args), None, results, warnings), 0


def cmd_distance(args) -> tuple[dict, int]:
    doc, h, subs = _load(args.file)
    e1 = _parse_edge(h, args.edge[0])
    e2 = _parse_edge(h, args.edge[1])
    d = topology.path_distance(h, e1, e2)
    results = {"from": list(h.edge_labels(e1)), "to": list(h.edge_labels(e2)), "distance": str(d)}
    return build_report(_echo(args), None, results), 0


def cmd_persist(args) -> tuple[dict, int]:
    doc, h, subs = _load(args.file)
    coeff = _coeff(args.coeff)
    if not coeff.is_field:
        raise InputError("persistence requires field coefficients (q or zp:<p>)")
    ws = Workspace(h)
    degrees = [args.degree] if args.degree is not None else list(range(ws.top_dim + 1))
    if args.filtration == "sublevel":
        values = doc.edge_values(h)
        if not values:
            raise InputError("sublevel filtration requires per-hyperedge values in the document")
        missing = [e for e in h.edges if e not in values]
        if missing:
            raise InputError("every hyperedge needs a value for the sublevel filtration")
        if args.grid:
            thresholds = [Fraction(t) for t in args.grid.split(",")]
        else:
            thresholds = sorted(set(values.values()))
        filt = sublevel_filtration(h, values, thresholds)
        if args.rank_invariant:
            from .persistence import rank_invariant_2d

            tables = {}
            for n in degrees:
                ri = rank_invariant_2d(h, values, thresholds, n, coeff, ws, check_squares=False)
                tables[f"degree_{n}"] = {
                    flavor: {f"({ri.thresholds[i]},{ri.thresholds[j]})": r for (i, j), r in sorted(cells.items())}
                    for flavor, cells in ri.ranks.items()
                }
            results = {"thresholds": [str(t) for t in filt.values], "rank_invariant": tables}
            return build_report(_echo(args), coeff, results), 0
    else:
        if not args.sub or args.sub not in subs:
            raise InputError("core-neighborhood filtrations require --sub <name>")
        filt = iterated_filtration(h, subs[args.sub], args.kmax)
    barcodes = []
    for n in degrees:
        if args.relative:
            if args.filtration != "core-neighborhood":
                raise InputError("--relative applies to core-neighborhood filtrations")
            barcodes.append(relative_persistence(h, filt, n, coeff, args.flavor, ws))
        else:
            barcodes.append(barcode(filt, n, coeff, args.flavor, ws))
    rows = []
    from .reports import barcode_rows

    for row in barcode_rows(barcodes):
        birth = filt.value_str(row["birth"])
        death = "inf" if row["death"] == "inf" else filt.value_str(row["death"])
        rows.append({"degree": row["degree"], "birth": birth, "death": death, "multiplicity": row["multiplicity"]})
    results = {
        "steps": [{"index": filt.value_str(i), "label": (filt.labels[i] if filt.labels else str(i)), "size": len(s)} for i, s in enumerate(filt.steps)],
        "bars": rows,
        "flavor": args.flavor,
        "relative": bool(args.relative),
    }
    report = build_report(_echo(args), coeff, results)
    if args.output == "csv":
        report["_csv"] = barcode_csv(barcodes, value_of=filt.value_str)
    return report, 0


def cmd_verify(args, threads: int) -> tuple[dict, int]:
    doc, h, subs = _load(args.file)
    options = VerifyOptions(seed=args.seed, fuzz=args.fuzz, threads=threads, kmax=args.kmax)
    result = run_check(args.check, h, subs, options)
    results = {"check": result.name, "passed": result.passed, **result.details}
    report = build_report(_echo(args), None, results, result.warnings)
    return report, 0 if result.passed else 1


def _echo(args) -> str:
    parts = [args.command]
    for key, value in sorted(vars(args).items()):
        if key in ("command",) or value in (None, False):
            continue
        if key == "file":
            parts.append(os.path.basename(str(value)))
        elif isinstance(value, list):
            parts.extend(str(v) for v in value)
        elif value is True:
            parts.append(f"--{key.replace('_', '-')}")
        else:
            parts.append(f"--{key.replace('_', '-')}={value}")
    return " ".join(parts)


def main(argv=None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = args.threads if args.threads else _thread_default()
    try:
        if args.command == "homology":
            report, code = cmd_homology(args)
        elif args.command == "topology":
            report, code = cmd_topology(args)
        elif args.command == "distance":
            report, code = cmd_distance(args)
        elif args.command == "persist":
            args.output = getattr(args, "output", "text")
            report, code = cmd_persist(args)
        elif args.command == "verify":
            report, code = cmd_verify(args, threads)
        else:  # pragma: no cover
            raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HyperhomError as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return 1
    csv_payload = report.pop("_csv", None)
    if args.output == "json":
        stdout.write(render_json(report))
    elif args.output == "csv":
        if csv_payload is None:
            print("error: csv output is only available for persist barcodes", file=sys.stderr)
            return 2
        stdout.write(csv_payload)
    else:
        stdout.write(render_text(report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
