"""Command-line surface for the full pipeline.

Subcommands: graphs gen/count, props, qaoa, analyze corr/avg/hist/signs,
and verify.  Exit codes: 0 success, 1 failed verification, 2 bad arguments
or malformed inputs, 3 missing input files.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, datastore, pipeline, verify
from .graphs import (connected_graph_count, encode_graph6, enumerate_connected,
                     read_graph6_file, write_graph6_file)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_MISSING_INPUT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgraphlab",
                                     description="Exhaustive QAOA MaxCut study on small graphs")
    parser.add_argument("--config", help="flat key=value config file with run defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    graphs = sub.add_parser("graphs", help="enumerate connected non-isomorphic graphs")
    graphs_sub = graphs.add_subparsers(dest="graphs_command", required=True)
    gen = graphs_sub.add_parser("gen", help="emit graph6 records, one per line")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--out", help="output file (default: stdout)")
    count = graphs_sub.add_parser("count", help="print the number of graphs")
    count.add_argument("--n", type=int, required=True)

    props = sub.add_parser("props", help="per-graph structure and symmetry dataset")
    props.add_argument("--in", dest="infile", required=True, help="graph6 input file")
    props.add_argument("--out", required=True, help="dataset CSV to write")
    props.add_argument("--workers", type=int)

    qaoa_cmd = sub.add_parser("qaoa", help="optimize angles and store metrics for depths 0..P")
    qaoa_cmd.add_argument("--in", dest="infile", required=True, help="graph6 input file")
    qaoa_cmd.add_argument("--p", type=int, required=True, help="maximum depth (0..3)")
    qaoa_cmd.add_argument("--starts", type=int, help="random starts per depth (default 200)")
    qaoa_cmd.add_argument("--seed", type=int, help="global seed (default 0)")
    qaoa_cmd.add_argument("--out", required=True, help="results CSV to write")
    qaoa_cmd.add_argument("--workers", type=int)

    an = sub.add_parser("analyze", help="statistics over props + qaoa CSVs")
    an.add_argument("mode", choices=["corr", "avg", "hist", "signs"])
    an.add_argument("--props", required=True, help="dataset CSV from `props`")
    an.add_argument("--qaoa", dest="qaoa_file", required=True, help="results CSV from `qaoa`")
    an.add_argument("--flag", choices=["bipartite", "eulerian"],
                    help="subgroup flag (avg and hist)")
    an.add_argument("--bins", type=int, default=20, help="histogram bins (default 20)")
    an.add_argument("--metric", default="prob_cmax", choices=list(analysis.METRIC_NAMES),
                    help="histogram metric (default prob_cmax)")
    an.add_argument("--p", type=int, help="histogram depth (default: largest present)")
    an.add_argument("--out", required=True)

    ver = sub.add_parser("verify", help="run the acceptance suites")
    ver.add_argument("--suite", choices=["golden", "invariants"], required=True)
    ver.add_argument("--long", action="store_true",
                     help="include the n<=6 correlation-grid reproduction (tens of minutes)")
    ver.add_argument("--huge", action="store_true",
                     help="include the n=8 sign grid (multi-hour)")
    ver.add_argument("--starts", type=int, default=200)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--workers", type=int)
    return parser


def _load_graphs(path: str):
    graphs = read_graph6_file(path)
    if not graphs:
        raise ValueError(f"no graph6 records in {path}")
    return graphs


def _cmd_graphs(args) -> int:
    if args.graphs_command == "count":
        print(connected_graph_count(args.n))
        return EXIT_OK
    graphs = enumerate_connected(args.n)
    if args.out:
        write_graph6_file(graphs, args.out)
    else:
        for g in graphs:
            print(encode_graph6(g))
    return EXIT_OK


def _cmd_props(args, config: datastore.RunConfig) -> int:
    graphs = _load_graphs(args.infile)
    sizes = {g.n for g in graphs}
    if len(sizes) != 1:
        raise ValueError(f"props expects one vertex count per file, found {sorted(sizes)}")
    rows = pipeline.dataset_rows(graphs, workers=args.workers or config.workers or None)
    datastore.write_dataset_file(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_qaoa(args, config: datastore.RunConfig) -> int:
    if not 0 <= args.p <= 3:
        raise ValueError(f"--p must be within 0..3, got {args.p}")
    graphs = _load_graphs(args.infile)
    starts = args.starts if args.starts is not None else config.starts
    seed = args.seed if args.seed is not None else config.seed
    rows = pipeline.qaoa_result_rows(graphs, args.p, starts, seed,
                                     workers=args.workers or config.workers or None)
    datastore.write_qaoa_results(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def _analysis_inputs(args):
    rows = datastore.read_dataset(args.props)
    results = datastore.read_qaoa_results(args.qaoa_file)
    sizes = sorted({r.n for r in results})
    depths = sorted({r.p for r in results})
    # graph ids restart at 1 for every vertex count, so pairing is per-n
    outcomes_by_n = {n: [r.as_outcome() for r in results if r.n == n] for n in sizes}
    return rows, outcomes_by_n, sizes, depths


def _cmd_analyze(args) -> int:
    rows, outcomes_by_n, sizes, depths = _analysis_inputs(args)
    if args.mode == "corr":
        cells = []
        for n in sizes:
            for p in depths:
                cells.extend(analysis.correlation_table(rows, outcomes_by_n[n], n, p))
        datastore.write_correlation_csv(cells, args.out)
    elif args.mode == "avg":
        if not args.flag:
            raise ValueError("analyze avg requires --flag bipartite|eulerian")
        avg_rows = []
        for n in sizes:
            for p in depths:
                avg_rows.extend(analysis.group_averages(rows, outcomes_by_n[n], n, p, args.flag))
        datastore.write_averages_csv(avg_rows, args.out)
    elif args.mode == "hist":
        if not args.flag:
            raise ValueError("analyze hist requires --flag bipartite|eulerian")
        if len(sizes) != 1:
            raise ValueError(f"analyze hist expects one vertex count, found {sizes}")
        p = args.p if args.p is not None else max(depths)
        spec = analysis.histogram(rows, outcomes_by_n[sizes[0]], sizes[0], p, args.flag,
                                  metric=args.metric, bins=args.bins)
        datastore.write_histogram_csv(spec, args.out)
    else:  # signs
        cells = []
        for n in sizes:
            for p in (1, 2, 3):
                if p not in depths:
                    raise ValueError(f"sign summary needs depths 1..3; results only have {depths}")
                cells.extend(analysis.correlation_table(rows, outcomes_by_n[n], n, p))
        datastore.write_signs_csv(analysis.sign_summary(cells), args.out)
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite == "golden":
        results = verify.golden_suite(include_slow=args.long, include_huge=args.huge,
                                      starts=args.starts, seed=args.seed, workers=args.workers)
    else:
        results = verify.invariant_suite(workers=args.workers)
    for result in results:
        print(result.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = datastore.load_config(args.config) if args.config else datastore.RunConfig()
        if args.command == "graphs":
            return _cmd_graphs(args)
        if args.command == "props":
            return _cmd_props(args, config)
        if args.command == "qaoa":
            return _cmd_qaoa(args, config)
        if args.command == "analyze":
            return _cmd_analyze(args)
        return _cmd_verify(args)
    except FileNotFoundError as exc:
        print(f"error: missing input: {exc}", file=sys.stderr)
        return EXIT_MISSING_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
