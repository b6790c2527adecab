"""Command line front end: generate, layout, score, experiment.

Exit codes: 0 success, 1 usage error, 2 data error, 3 failed experiment
assertion. Tables round to 4 decimals; JSON output keeps full precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .experiment import (
    FAST_SNAPSHOTS,
    ExperimentConfig,
    run_validity_experiment,
)
from .model import (
    DrawingSet,
    DrawingSetError,
    SemanticError,
    parse_drawing_set,
    serialize_drawing_set,
)
from .quality import compare_drawing_set
from .synthesis import (
    LayoutParams,
    Seed,
    erdos_renyi_gnm,
    force_directed_snapshots,
    randomized_layout_suite,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ASSERTION = 3

DEFAULT_SNAPSHOTS = "3000,6000,9000,12000"


class _Parser(argparse.ArgumentParser):
    """argparse's default usage-error exit code is 2; this tool uses 1."""

    def error(self, message: str):  # noqa: ANN201 - argparse signature
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _embedder_flags() -> argparse.ArgumentParser:
    defaults = LayoutParams()
    shared = argparse.ArgumentParser(add_help=False)
    g = shared.add_argument_group("embedder parameters")
    g.add_argument("--area-side", type=float, default=defaults.area_side)
    g.add_argument("--ideal-edge-factor", type=float, default=defaults.ideal_edge_factor)
    g.add_argument("--initial-temperature", type=float, default=defaults.initial_temperature)
    g.add_argument("--cooling-decay", type=float, default=defaults.cooling_decay)
    g.add_argument("--min-temperature", type=float, default=defaults.min_temperature)
    return shared


def _params_from(args: argparse.Namespace, iterations: int) -> LayoutParams:
    return LayoutParams(
        area_side=args.area_side,
        ideal_edge_factor=args.ideal_edge_factor,
        initial_temperature=args.initial_temperature,
        cooling_decay=args.cooling_decay,
        min_temperature=args.min_temperature,
        iterations=iterations,
    )


def _parse_snapshots(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"snapshot list {text!r} is not comma-separated integers")
    if not values:
        raise ValueError("snapshot list is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drawqual", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    embedder = _embedder_flags()

    p_gen = sub.add_parser("generate", help="sample a random graph into a drawing-set file")
    p_gen.add_argument("--nodes", type=int, required=True)
    p_gen.add_argument("--edges", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--connected", action="store_true", help="resample until connected")
    p_gen.add_argument("--out", type=Path, required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_lay = sub.add_parser(
        "layout",
        parents=[embedder],
        help="draw the graph of a drawing-set file",
    )
    p_lay.add_argument("--in", dest="infile", type=Path, required=True)
    p_lay.add_argument("--seed", type=int, default=0)
    p_lay.add_argument(
        "--snapshots",
        default=None,
        help=f"comma-separated iteration counts (default {DEFAULT_SNAPSHOTS})",
    )
    p_lay.add_argument(
        "--random-suite",
        type=int,
        default=None,
        metavar="COUNT",
        help="instead of snapshots, draw COUNT layouts with random recipes",
    )
    p_lay.add_argument(
        "--iterations",
        type=int,
        default=None,
        help="iteration budget (default: largest snapshot)",
    )
    p_lay.add_argument("--out", type=Path, required=True)
    p_lay.set_defaults(func=cmd_layout)

    p_score = sub.add_parser("score", help="rank the layouts of a drawing-set file")
    p_score.add_argument("--in", dest="infile", type=Path, required=True)
    p_score.add_argument("--format", choices=("table", "json"), default="table")
    p_score.set_defaults(func=cmd_score)

    p_exp = sub.add_parser("experiment", help="built-in experiments")
    exp_sub = p_exp.add_subparsers(dest="experiment", required=True, parser_class=_Parser)
    p_val = exp_sub.add_parser(
        "validity",
        parents=[embedder],
        help="check that more embedder iterations score better",
    )
    p_val.add_argument("--graphs", type=int, default=20)
    p_val.add_argument("--nodes", type=int, default=30)
    p_val.add_argument("--edges", type=int, default=40)
    p_val.add_argument("--snapshots", default=None)
    p_val.add_argument("--seed", type=int, default=0)
    p_val.add_argument(
        "--fast",
        action="store_true",
        help=f"short run at {','.join(str(s) for s in FAST_SNAPSHOTS)} iterations "
        "with ten-times temperatures, first-vs-last assertion only",
    )
    p_val.add_argument("--format", choices=("table", "json"), default="table")
    p_val.set_defaults(func=cmd_experiment_validity)

    return parser


def cmd_generate(args: argparse.Namespace) -> int:
    graph = erdos_renyi_gnm(
        args.nodes, args.edges, Seed(args.seed), require_connected=args.connected
    )
    args.out.write_text(serialize_drawing_set(DrawingSet(graph)))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_layout(args: argparse.Namespace) -> int:
    ds = parse_drawing_set(args.infile.read_text())
    graph = ds.graph
    if args.random_suite is not None:
        if args.snapshots is not None or args.iterations is not None:
            raise ValueError("--random-suite excludes --snapshots and --iterations")
        out_set = randomized_layout_suite(graph, args.random_suite, Seed(args.seed))
    else:
        snaps = _parse_snapshots(args.snapshots or DEFAULT_SNAPSHOTS)
        budget = args.iterations if args.iterations is not None else max(snaps)
        params = _params_from(args, budget)
        pairs = force_directed_snapshots(graph, params, snaps, Seed(args.seed))
        out_set = DrawingSet(
            graph, tuple((f"iter{it}", layout) for it, layout in pairs)
        )
    args.out.write_text(serialize_drawing_set(out_set))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_score(args: argparse.Namespace) -> int:
    ds = parse_drawing_set(args.infile.read_text())
    try:
        report = compare_drawing_set(ds)
    except ValueError as exc:
        if isinstance(exc, DrawingSetError):
            raise
        raise SemanticError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK
    name_w = max(4, *(len(sc.layout_name) for sc in report.scores))
    print(
        f"{'rank':>4}  {'name':<{name_w}}  {'cross':>6}  {'crossres':>9}  "
        f"{'angres':>9}  {'lenspread':>10}  {'overall':>8}"
    )
    for sc in report.scores:
        print(
            f"{sc.rank:>4}  {sc.layout_name:<{name_w}}  {sc.raw.cross_count:>6}  "
            f"{sc.raw.cross_res_deg:>9.4f}  {sc.raw.angular_res_deg:>9.4f}  "
            f"{sc.raw.edge_len_stddev:>10.4f}  {sc.overall:>8.4f}"
        )
    return EXIT_OK


def cmd_experiment_validity(args: argparse.Namespace) -> int:
    if args.fast and args.snapshots is not None:
        raise ValueError("--fast already fixes the snapshot list")
    if args.fast:
        snaps = list(FAST_SNAPSHOTS)
    else:
        snaps = _parse_snapshots(args.snapshots or DEFAULT_SNAPSHOTS)
    params = _params_from(args, max(snaps))
    if args.fast:
        # tenth-length runs need ten-times the per-iteration step budget
        params = replace(
            params,
            initial_temperature=10.0 * params.initial_temperature,
            min_temperature=10.0 * params.min_temperature,
        )
    config = ExperimentConfig(
        graph_count=args.graphs,
        node_count=args.nodes,
        edge_count=args.edges,
        snapshots=tuple(snaps),
        master_seed=args.seed,
        params=params,
    )
    report = run_validity_experiment(config)
    if args.fast:
        passed = report.first_vs_last_increasing()
        assertion = "mean overall higher at the last snapshot than the first"
    else:
        passed = report.mean_strictly_increasing()
        assertion = "mean overall strictly increasing across snapshots"

    if args.format == "json":
        doc = report.to_dict()
        doc["assertion"] = assertion
        doc["passed"] = passed
        print(json.dumps(doc, indent=2))
    else:
        head = "  ".join(f"{'iter' + str(c):>10}" for c in report.conditions)
        print(f"{'graph':>5}  {head}")
        for i, row in enumerate(report.per_graph_overall):
            cells = "  ".join(f"{v:>10.4f}" for v in row)
            print(f"{i:>5}  {cells}")
        cells = "  ".join(f"{v:>10.4f}" for v in report.mean_overall)
        print(f"{'mean':>5}  {cells}")
        print(f"monotone fraction: {report.monotone_fraction:.4f}")
        print(f"rank correlation:  {report.rank_correlation:.4f}")
        print(f"assertion: {assertion}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_ASSERTION


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DrawingSetError as exc:
        print(f"drawqual: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, RuntimeError) as exc:
        print(f"drawqual: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"drawqual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
