"""Command-line interface.

Subcommands: ``static`` (whole-stream labeling), ``stream`` (sliding-window
labelings as JSON lines), ``metrics`` (evaluate a saved labeling), ``synth``
(synthetic stream generation).  Exit codes: 0 success, 1 usage error,
2 data error, 3 exact-solver cap exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import gzip
import json
import sys

from .aggregate import AggregatedGraph, get_weighting
from .errors import CapExceededError, DataError
from .metrics import metrics_report
from .static import (
    StrongWeakLabeling,
    labeling_from_weak,
    stc_exact,
    stc_highdeg,
    stc_matching,
    stc_pricing,
    write_ilp,
)
from .stream import run_stream
from .synth import generate_stream, write_stream
from .temporal import iter_edges

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_CAP = 3

SECONDS_PER = {"hour": 3600, "day": 86400, "week": 604800}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this project reserves 2 for data
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _open_input(path: str):
    if path == "-":
        yield sys.stdin
    elif path.endswith(".gz"):
        with gzip.open(path, "rt") as fp:
            yield fp
    else:
        with open(path) as fp:
            yield fp


@contextlib.contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fp:
            yield fp


def _edge_list(keys) -> list[list[int]]:
    return [list(k) for k in sorted(keys)]


def cmd_static(args) -> int:
    phi = get_weighting(args.weighting)
    with _open_input(args.input) as fp:
        agg = AggregatedGraph.from_edges(iter_edges(fp), phi)
    if args.algo in ("ilp-export-max", "ilp-export-min"):
        direction = "max" if args.algo.endswith("max") else "min"
        with _open_output(args.output) as out:
            write_ilp(agg, direction, out)
        return EXIT_OK
    if args.algo == "pricing":
        labeling = stc_pricing(agg)
    elif args.algo == "matching":
        labeling = stc_matching(agg)
    elif args.algo == "highdeg":
        labeling = stc_highdeg(agg)
    else:
        labeling = stc_exact(agg, cap=args.oracle_cap, unweighted=args.unweighted)
    record = {
        "algo": args.algo,
        "weighting": args.weighting,
        "n_edges": agg.n_edges,
        "n_strong": labeling.n_strong,
        "n_weak": labeling.n_weak,
        "strong_weight": labeling.strong_weight,
        "weak_weight": labeling.weak_weight,
        "strong": _edge_list(labeling.strong),
        "weak": _edge_list(labeling.weak),
    }
    if agg.n_edges:
        report = metrics_report(
            agg, labeling, k=min(args.top_k, agg.n_edges), rank_by=args.rank_by
        )
        record["metrics"] = report.as_dict()
    with _open_output(args.output) as out:
        json.dump(record, out, sort_keys=True)
        out.write("\n")
    return EXIT_OK


STATS_COLUMNS = [
    "t_start",
    "t_end",
    "changed",
    "expired",
    "arrived",
    "agg_edges",
    "wedge_vertices",
    "wedge_edges",
    "sigma_len",
    "examined",
    "d_a_max",
    "d_w_max",
    "cost_bound",
]


def cmd_stream(args) -> int:
    phi = get_weighting(args.weighting)
    if args.delta is not None:
        delta = args.delta
    else:
        if args.unit_seconds is None:
            raise DataError("--delta-unit requires --unit-seconds")
        delta = max(1, SECONDS_PER[args.delta_unit] // args.unit_seconds)
    stats_fp = open(args.stats, "w", newline="") if args.stats else None
    stats_writer = None
    if stats_fp is not None:
        stats_writer = csv.writer(stats_fp)
        stats_writer.writerow(STATS_COLUMNS)
    try:
        with _open_input(args.input) as fp, _open_output(args.output) as out:
            for res in run_stream(
                iter_edges(fp), delta, phi, mode=args.mode, stride=args.stride
            ):
                record = {
                    "t_start": res.window.t_start,
                    "t_end": res.window.t_end,
                    "changed": res.changed,
                    "n_strong": len(res.strong),
                    "n_weak": len(res.weak),
                    "strong_weight": res.strong_weight,
                    "weak_weight": res.weak_weight,
                }
                if not args.summary:
                    record["strong"] = _edge_list(res.strong)
                    record["weak"] = _edge_list(res.weak)
                out.write(json.dumps(record, sort_keys=True) + "\n")
                if stats_writer is not None:
                    s = res.stats
                    stats_writer.writerow(
                        [
                            res.window.t_start,
                            res.window.t_end,
                            int(res.changed),
                            s.expired,
                            s.arrived,
                            s.agg_edges,
                            s.wedge_vertices,
                            s.wedge_edges,
                            s.sigma_len,
                            s.examined,
                            s.d_a_max,
                            s.d_w_max,
                            s.cost_bound,
                        ]
                    )
    finally:
        if stats_fp is not None:
            stats_fp.close()
    return EXIT_OK


def cmd_metrics(args) -> int:
    phi = get_weighting(args.weighting)
    with _open_input(args.input) as fp:
        agg = AggregatedGraph.from_edges(iter_edges(fp), phi)
    with open(args.labeling) as fp:
        saved = json.load(fp)
    strong = frozenset(tuple(e) for e in saved["strong"])
    weak = frozenset(tuple(e) for e in saved["weak"])
    if strong | weak != frozenset(agg.edge_keys()) or strong & weak:
        raise DataError("labeling does not partition the aggregated edge set")
    labeling = labeling_from_weak(agg, weak)
    report = metrics_report(
        agg, labeling, k=min(args.top_k, max(agg.n_edges, 1)), rank_by=args.rank_by
    )
    with _open_output(args.output) as out:
        if args.format == "json":
            json.dump(report.as_dict(), out, sort_keys=True)
            out.write("\n")
        else:
            writer = csv.writer(out)
            writer.writerow(sorted(report.as_dict()))
            writer.writerow([v for _, v in sorted(report.as_dict().items())])
    return EXIT_OK


def cmd_synth(args) -> int:
    edges = generate_stream(
        n_nodes=args.nodes,
        n_edges=args.edges,
        t_max=args.t_max,
        alpha=args.alpha,
        burst=args.burst,
        durations=args.durations,
        seed=args.seed,
    )
    header = (
        f"synthetic temporal edge list: nodes={args.nodes} edges={args.edges} "
        f"t_max={args.t_max} alpha={args.alpha} burst={args.burst} seed={args.seed}"
    )
    with _open_output(args.out) as out:
        write_stream(edges, out, header=header)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stcstream", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_weighting(p):
        p.add_argument(
            "--weighting",
            choices=["freq", "decay", "duration"],
            default="freq",
            help="tie-strength weighting of aggregated edges (default: freq)",
        )

    p_static = sub.add_parser("static", help="label the fully aggregated stream")
    p_static.add_argument("input", help="edge-list file (u v t [dur]; '-' = stdin)")
    add_weighting(p_static)
    p_static.add_argument(
        "--algo",
        choices=["pricing", "matching", "highdeg", "exact", "ilp-export-max", "ilp-export-min"],
        default="pricing",
    )
    p_static.add_argument(
        "--unweighted",
        action="store_true",
        help="exact solver minimizes the weak-edge count instead of weight",
    )
    p_static.add_argument("--oracle-cap", type=int, default=20, metavar="N",
                          help="refuse exact solves above N wedge vertices")
    p_static.add_argument("--top-k", type=int, default=100)
    p_static.add_argument("--rank-by", choices=["weight", "degree"], default="weight")
    p_static.add_argument("--output", "-o", default=None)
    p_static.set_defaults(func=cmd_static)

    p_stream = sub.add_parser("stream", help="sliding-window labelings as JSON lines")
    p_stream.add_argument("input")
    add_weighting(p_stream)
    group = p_stream.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=int, help="window length in timestamp units")
    group.add_argument("--delta-unit", choices=sorted(SECONDS_PER),
                       help="window length as a wall-clock unit; needs --unit-seconds")
    p_stream.add_argument("--unit-seconds", type=int, default=None,
                          help="seconds represented by one timestamp unit")
    p_stream.add_argument("--stride", type=int, default=1)
    p_stream.add_argument("--mode", choices=["dynamic", "recompute"], default="dynamic")
    p_stream.add_argument("--summary", action="store_true",
                          help="omit per-window edge lists from the output")
    p_stream.add_argument("--stats", default=None, metavar="CSV",
                          help="write per-window work statistics to CSV")
    p_stream.add_argument("--output", "-o", default=None)
    p_stream.set_defaults(func=cmd_stream)

    p_metrics = sub.add_parser("metrics", help="evaluate a saved labeling")
    p_metrics.add_argument("input", help="the edge-list file the labeling was computed from")
    p_metrics.add_argument("--labeling", required=True,
                           help="JSON labeling written by the static subcommand")
    add_weighting(p_metrics)
    p_metrics.add_argument("--top-k", type=int, default=100)
    p_metrics.add_argument("--rank-by", choices=["weight", "degree"], default="weight")
    p_metrics.add_argument("--format", choices=["json", "csv"], default="json")
    p_metrics.add_argument("--output", "-o", default=None)
    p_metrics.set_defaults(func=cmd_metrics)

    p_synth = sub.add_parser("synth", help="generate a synthetic temporal stream")
    p_synth.add_argument("--nodes", type=int, required=True)
    p_synth.add_argument("--edges", type=int, required=True)
    p_synth.add_argument("--t-max", type=int, default=1000)
    p_synth.add_argument("--alpha", type=float, default=2.0)
    p_synth.add_argument("--burst", type=float, default=0.1)
    p_synth.add_argument("--durations", action="store_true")
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--out", "-o", default=None)
    p_synth.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DataError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
