"""Command-line front end.

Subcommands: compute, betti, verify, table, explore, dims, reduce, iso.
Exit codes: 0 success / all match; 1 verification mismatch; 2 usage error;
3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .complexes import independence_complex, matching_complex
from .errors import GridmatchError, InvalidParameterError, ResourceLimitError
from .families import FAMILY_TAGS, build_family, family_id
from .graphs import build_cycle, build_grid, build_path, line_graph, parse_edge_list
from .homology import betti_reduced
from .isomorphism import are_isomorphic
from .reduction import format_trace, reduce_pipeline
from .verify import (DEFAULT_VERIFY_BUDGET, betti_with_reduction, run_verify,
                     verify_cell)
from .wedges import dimension_range, homotopy_type

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_source(args, what="graph"):
    """Parse a positional graph spec, returning (graph, name, consumed).

    Forms: '<FAMILY> <n>', 'grid <m> <n>', 'path <r>', 'cycle <r>',
    'file <path>'.
    """
    if not args:
        raise InvalidParameterError(f"missing {what} spec")
    head = args[0]
    if head in ("grid",):
        m, n = int(args[1]), int(args[2])
        return build_grid(m, n), f"grid({m},{n})", 3
    if head == "path":
        r = int(args[1])
        return build_path(r), f"path({r})", 2
    if head == "cycle":
        r = int(args[1])
        return build_cycle(r), f"cycle({r})", 2
    if head == "file":
        with open(args[1]) as fh:
            return parse_edge_list(fh.read()), "file", 2
    f = family_id(head)
    n = int(args[1])
    return build_family(f, n), f"{f}_{n}", 2


def _print(data, as_json: bool):
    if as_json:
        print(json.dumps(data, sort_keys=True))


def cmd_compute(opts) -> int:
    w = homotopy_type(opts.family, opts.n)
    if opts.json:
        print(json.dumps(w.to_json(), sort_keys=True))
    else:
        print(w.render())
    return EXIT_OK


def cmd_table(opts) -> int:
    rows = {f: [homotopy_type(f, n) for n in range(1, opts.n_max + 1)]
            for f in FAMILY_TAGS}
    if opts.json:
        print(json.dumps({f: [w.to_json() for w in ws] for f, ws in rows.items()},
                         sort_keys=True))
        return EXIT_OK
    cells = {f: [w.render() for w in rows[f]] for f in FAMILY_TAGS}
    widths = [max(len(cells[f][j]) for f in FAMILY_TAGS) for j in range(opts.n_max)]
    header = "n    " + "  ".join(str(j + 1).ljust(widths[j]) for j in range(opts.n_max))
    print(header)
    for f in FAMILY_TAGS:
        print(f + "    " + "  ".join(cells[f][j].ljust(widths[j]) for j in range(opts.n_max)))
    return EXIT_OK


def cmd_betti(opts) -> int:
    try:
        g, name, _ = _parse_source(opts.source)
        if opts.matching:
            g, name = line_graph(g), f"line({name})"
        bv, nred, timings = betti_with_reduction(
            g, method=opts.method, budget=opts.budget,
            use_reduction=not opts.raw)
    except ResourceLimitError as exc:
        print(f"resource-limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    payload = {"source": name, "betti": bv.to_json(), "timings": timings,
               "reduced_vertices": nred, "reductions": "fold/cone" if not opts.raw else "none",
               "version": __version__}
    if opts.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{name}: reduced betti {bv.as_dict() or '{} (contractible)'} "
              f"torsion_free={bv.torsion_free} method={bv.method}")
    return EXIT_OK


def cmd_verify(opts) -> int:
    fams = FAMILY_TAGS if opts.families in ("all", "") else \
        [family_id(t) for t in opts.families.replace(",", " ").split()]
    n_max = max(opts.n_max, 6) if opts.deep else opts.n_max
    reports = run_verify(fams, n_max, budget=opts.budget,
                         use_reduction=not opts.raw, jobs=opts.jobs,
                         no_cache=opts.no_cache)
    payload = [r.to_json() for r in reports]
    with open(opts.report, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
    bad = False
    limited = False
    for r in reports:
        line = f"{r.family}_{r.n}: {r.status}"
        if r.status == "match":
            line += f"  {r.symbolic.render()}"
        elif r.status == "mismatch":
            bad = True
            line += (f"  symbolic={r.symbolic.as_dict()}"
                     f"  betti={r.betti.as_dict() if r.betti else None}"
                     f"  torsion_free={r.betti.torsion_free if r.betti else None}")
        elif r.status == "resource-limit":
            limited = True
            line += f"  ({r.note})"
        print(line)
    if opts.json:
        print(json.dumps(payload, sort_keys=True))
    print(f"report written to {opts.report}")
    if bad:
        return EXIT_MISMATCH
    if limited:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_explore(opts) -> int:
    g = build_grid(opts.m, opts.n)
    try:
        bv, nred, timings = betti_with_reduction(
            line_graph(g), method=opts.method, budget=opts.budget,
            use_reduction=not opts.raw)
    except ResourceLimitError as exc:
        print(f"resource-limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    supp = bv.support()
    contiguous = (not supp) or list(supp) == list(range(supp[0], supp[-1] + 1))
    payload = {"grid": [opts.m, opts.n], "betti": bv.to_json(),
               "band": ([supp[0], supp[-1]] if supp else None),
               "contiguous_band": contiguous, "timings": timings,
               "version": __version__}
    if opts.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"M(grid({opts.m},{opts.n})): betti {bv.as_dict() or '{} (contractible)'} "
              f"band={payload['band']} contiguous={contiguous}")
    if bv.torsion_free is False:
        print("*** TORSION DETECTED: "
              f"{[(d, list(fs)) for d, fs in bv.torsion_detail]} ***")
        print("*** a torsion class here would contradict the wedge-of-spheres picture ***")
    return EXIT_OK


def cmd_dims(opts) -> int:
    r = dimension_range(opts.family, opts.n)
    w = homotopy_type(opts.family, opts.n)
    actual = w.support()
    if r is None:
        ok = w.is_contractible()
        msg = f"{opts.family}_{opts.n}: contractible"
    else:
        ok = list(actual) == list(range(r.low, r.high + 1))
        msg = f"{opts.family}_{opts.n}: predicted {r} actual {list(actual)}"
    msg += "  OK" if ok else "  DISAGREE"
    if opts.json:
        print(json.dumps({"family": opts.family, "n": opts.n,
                          "predicted": (None if r is None else r.as_tuple()),
                          "actual": list(actual), "ok": ok}, sort_keys=True))
    else:
        print(msg)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_reduce(opts) -> int:
    g, name, _ = _parse_source(opts.source)
    terminal, trace = reduce_pipeline(g)
    sys.stdout.write(format_trace(trace))
    if terminal != "contractible":
        print(f"# terminal graph: {len(terminal)} vertices, "
              f"{terminal.num_edges()} edges ({name})")
    return EXIT_OK


def cmd_iso(opts) -> int:
    args = list(opts.specs)
    g, gname, used = _parse_source(args, "first graph")
    h, hname, _ = _parse_source(args[used:], "second graph")
    witness = are_isomorphic(g, h)
    if opts.json:
        print(json.dumps({"isomorphic": witness is not None,
                          "witness": ({str(k): str(v) for k, v in witness.items()}
                                      if witness else None)}, sort_keys=True))
    elif witness is None:
        print(f"{gname} and {hname}: not isomorphic")
    else:
        print(f"{gname} and {hname}: isomorphic")
        for k in sorted(witness):
            print(f"  {k} -> {witness[k]}")
    return EXIT_OK if witness is not None else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gridmatch",
        description="Wedge-of-spheres calculus and brute-force homology for "
                    "matching complexes of 3 x n grid graphs.")
    p.add_argument("--version", action="version", version=f"gridmatch {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, method=True, budget=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if method:
            sp.add_argument("--method", default="crosscheck",
                            choices=["snf", "rank", "gf2", "gf3", "crosscheck"])
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_VERIFY_BUDGET,
                            help="max faces to enumerate")
        sp.add_argument("--raw", action="store_true",
                        help="skip fold/cone reductions before homology")

    sp = sub.add_parser("compute", help="symbolic homotopy type of a family member")
    sp.add_argument("family")
    sp.add_argument("n", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("table", help="symbolic table for all ten families")
    sp.add_argument("n_max", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("betti", help="brute-force reduced Betti numbers of Ind(graph)")
    sp.add_argument("source", nargs="+",
                    help="FAMILY n | grid m n | path r | cycle r | file path")
    sp.add_argument("--matching", action="store_true",
                    help="use the matching complex (line graph) instead")
    common(sp)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("verify", help="compare symbolic vs brute force per cell")
    sp.add_argument("--families", default="all", help="'all' or tags like G,B,O")
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--deep", action="store_true", help="extend the sweep to n = 6")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-cache", action="store_true")
    sp.add_argument("--report", default="verify_report.json")
    common(sp, method=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("explore", help="probe the matching complex of an m x n grid")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    common(sp)
    sp.set_defaults(func=cmd_explore)

    sp = sub.add_parser("dims", help="predicted sphere-dimension range vs actual support")
    sp.add_argument("family")
    sp.add_argument("n", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("reduce", help="dump the fold/cone reduction trace")
    sp.add_argument("source", nargs="+")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("iso", help="isomorphism test between two graph specs")
    sp.add_argument("specs", nargs="+",
                    help="two specs, e.g. 'B 1 cycle 6'")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_iso)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        return opts.func(opts)
    except (InvalidParameterError, FileNotFoundError, IndexError, KeyError) as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
    except ResourceLimitError as exc:
        print(f"resource-limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GridmatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
